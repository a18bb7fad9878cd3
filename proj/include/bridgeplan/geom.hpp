#ifndef BRIDGEPLAN_GEOM_HPP
#define BRIDGEPLAN_GEOM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bridgeplan::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double norm(Vec2 a);
double dist2(Vec2 a, Vec2 b);

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians, CCW from +x
};

// Two interchangeable plan encodings. Geometric: N points 1 m apart along the
// intended path plus one target-speed scalar. Temporal: N points 0.25 s apart;
// speed lives in the spacing.
enum class TrajKind { geometric, temporal };

constexpr int kGeometricPoints = 30;
constexpr int kTemporalPoints = 16;
constexpr double kGeometricSpacing = 1.0;   // m
constexpr double kTemporalSpacing = 0.25;   // s

int traj_points(TrajKind kind);
int flat_dim(TrajKind kind);
const char* kind_name(TrajKind kind);
TrajKind kind_from_name(const std::string& name);

struct Trajectory {
  TrajKind kind = TrajKind::geometric;
  std::vector<Vec2> points;
  double speed = 0.0;  // geometric only; ignored for temporal
};

// geometric: [x1,y1,...,xN,yN,speed], temporal: [x1,y1,...,xN,yN]
std::vector<double> flatten(const Trajectory& t);
Trajectory unflatten(TrajKind kind, const std::vector<double>& flat);

Vec2 to_ego_frame(const Pose& ego, Vec2 world_point);
Vec2 to_ego_frame_vel(const Pose& ego, Vec2 world_vel);
Vec2 from_ego_frame(const Pose& ego, Vec2 ego_point);

// ---- anchors ----

struct Anchor {
  std::vector<Vec2> points;
  double speed = 0.0;  // mean member speed; 0 for temporal anchors
};

struct AnchorSet {
  TrajKind kind = TrajKind::geometric;
  int n_point = 0;
  std::vector<Anchor> anchors;
};

struct KmeansParams {
  int max_iter = 200;
};

// k-means++ seeded Lloyd's iteration over waypoint coordinates (speed is not
// part of the distance). Empty clusters are re-seeded from the farthest point.
AnchorSet fit_anchors(const std::vector<Trajectory>& trajs, int n_anchor,
                      uint64_t seed, const KmeansParams& params = {});

// squared waypoint distance, ties resolved to the lowest index
int nearest_anchor(const AnchorSet& set, const Trajectory& traj);
double anchor_dist2(const Anchor& a, const Trajectory& traj);

double kmeans_inertia(const AnchorSet& set, const std::vector<Trajectory>& trajs);

void save_anchors(const AnchorSet& set, const std::string& path, uint64_t seed,
                  uint64_t config_hash);
AnchorSet load_anchors(const std::string& path);

// resample a geometric plan into the temporal encoding at the plan's speed
Trajectory temporal_from_plan(const Trajectory& geo);

// ---- polylines (shared by the toy world) ----

struct Polyline {
  std::vector<Vec2> pts;
  std::vector<double> cum;  // cumulative arc length, cum[0] = 0
};

Polyline build_polyline(std::vector<Vec2> pts);
double polyline_length(const Polyline& p);
Vec2 point_at_arc(const Polyline& p, double s);
double heading_at_arc(const Polyline& p, double s);
// returns (arc length of closest point, signed lateral offset, left positive)
struct FrenetPos {
  double s;
  double d;
};
FrenetPos project_to_polyline(const Polyline& p, Vec2 q);

}  // namespace bridgeplan::geom

#endif
