#pragma once

#include <utility>
#include <vector>

#include "gr2/crossratio.hpp"
#include "gr2/grassmann.hpp"

namespace gr2 {

/// Ordered configuration of n points on the projective line.
class PointConfiguration {
public:
    PointConfiguration(int n, std::vector<ProjectivePoint> points);

    int n() const { return n_; }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    const ProjectivePoint& point(int i) const { return points_.at(static_cast<size_t>(i - 1)); }

    /// Pairwise distinct.
    bool generic() const;

    friend bool operator==(const PointConfiguration& a, const PointConfiguration& b) {
        return a.n_ == b.n_ && a.points_ == b.points_;
    }

private:
    int n_;
    std::vector<ProjectivePoint> points_;
};

/// Invertible 2x2 matrix acting on the projective line, kept up to scale.
class ProjectiveTransform {
public:
    ProjectiveTransform(GaussianRational a, GaussianRational b, GaussianRational c,
                        GaussianRational d);

    static ProjectiveTransform identity() {
        return {GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(1)};
    }

    ProjectivePoint apply(const ProjectivePoint& p) const {
        return {a_ * p.first() + b_ * p.second(), c_ * p.first() + d_ * p.second()};
    }

    GaussianRational det() const { return a_ * d_ - b_ * c_; }
    const GaussianRational& a() const { return a_; }
    const GaussianRational& b() const { return b_; }
    const GaussianRational& c() const { return c_; }
    const GaussianRational& d() const { return d_; }

private:
    GaussianRational a_, b_, c_, d_;
};

/// Row i read as the point [a_i : b_i]; zero rows are rejected.
PointConfiguration config_of_plane(const Plane& plane);

/// Representatives of the points as plane rows; needs at least two distinct
/// points to span a 2-plane.
Plane plane_of_config(const PointConfiguration& config);

/// The unique transformation (up to scale) sending the first three points to
/// [1:0], [0:1], [1:1], together with the transformed configuration.
std::pair<PointConfiguration, ProjectiveTransform> normalize_config(const PointConfiguration& config);

/// Classical cross-ratio [det(p1,p3) det(p2,p4) : det(p1,p4) det(p2,p3)].
CrossRatioValue cross_ratio_of_points(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                      const ProjectivePoint& p3, const ProjectivePoint& p4);

}  // namespace gr2
