#include "gr2/gm_config.hpp"

namespace gr2 {

namespace {

GaussianRational det2(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.first() * q.second() - q.first() * p.second();
}

}  // namespace

PointConfiguration::PointConfiguration(int n, std::vector<ProjectivePoint> points)
    : n_(n), points_(std::move(points)) {
    if (points_.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("configuration point count does not match n");
}

bool PointConfiguration::generic() const {
    for (size_t a = 0; a < points_.size(); ++a)
        for (size_t b = a + 1; b < points_.size(); ++b)
            if (points_[a] == points_[b]) return false;
    return true;
}

ProjectiveTransform::ProjectiveTransform(GaussianRational a, GaussianRational b, GaussianRational c,
                                         GaussianRational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det().is_zero()) throw std::invalid_argument("projective transform must be invertible");
}

PointConfiguration config_of_plane(const Plane& plane) {
    std::vector<ProjectivePoint> points;
    points.reserve(static_cast<size_t>(plane.n()));
    for (int i = 1; i <= plane.n(); ++i) {
        const auto& [a, b] = plane.row(i);
        if (a.is_zero() && b.is_zero())
            throw std::invalid_argument("zero row has no associated point");
        points.emplace_back(a, b);
    }
    return {plane.n(), std::move(points)};
}

Plane plane_of_config(const PointConfiguration& config) {
    std::vector<Plane::Row> rows;
    rows.reserve(static_cast<size_t>(config.n()));
    for (const auto& p : config.points()) rows.emplace_back(p.first(), p.second());
    return {config.n(), std::move(rows)};  // Plane rejects rank < 2 configs
}

std::pair<PointConfiguration, ProjectiveTransform> normalize_config(const PointConfiguration& config) {
    if (config.n() < 3) throw std::invalid_argument("normalization needs at least three points");
    const ProjectivePoint& q1 = config.point(1);
    const ProjectivePoint& q2 = config.point(2);
    const ProjectivePoint& q3 = config.point(3);
    if (q1 == q2 || q1 == q3 || q2 == q3)
        throw std::invalid_argument("first three points must be pairwise distinct");

    // Write q3 = alpha q1 + beta q2; the inverse of [alpha q1 | beta q2]
    // sends q1, q2, q3 to [1:0], [0:1], [1:1].
    const GaussianRational d = det2(q1, q2);
    const GaussianRational alpha = det2(q3, q2) / d;
    const GaussianRational beta = det2(q1, q3) / d;
    const GaussianRational ca = alpha * q1.first();
    const GaussianRational cc = alpha * q1.second();
    const GaussianRational cb = beta * q2.first();
    const GaussianRational cd = beta * q2.second();
    ProjectiveTransform transform(cd, -cb, -cc, ca);  // adjugate of [ca cb; cc cd]

    std::vector<ProjectivePoint> mapped;
    mapped.reserve(static_cast<size_t>(config.n()));
    for (const auto& p : config.points()) mapped.push_back(transform.apply(p));
    return {PointConfiguration(config.n(), std::move(mapped)), transform};
}

CrossRatioValue cross_ratio_of_points(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                      const ProjectivePoint& p3, const ProjectivePoint& p4) {
    const GaussianRational num = det2(p1, p3) * det2(p2, p4);
    const GaussianRational den = det2(p1, p4) * det2(p2, p3);
    if (num.is_zero() && den.is_zero()) return CrossRatioValue::undefined();
    return CrossRatioValue::defined(ProjectivePoint(num, den));
}

}  // namespace gr2
