#pragma once

#include "funk/common.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Property batteries shared by the `suite` command and the acceptance
// runner. Every check takes its sample count and threshold explicitly and
// draws from a generator seeded by (seed, check name), so results do not
// depend on which other checks ran before.
namespace funk::checks {

struct CheckResult {
    std::string name;
    bool pass = true;
    long long count = 0;     // cases evaluated
    double worst = 0.0;      // worst observed statistic
    double threshold = 0.0;  // what the statistic is compared against
    std::string note;        // statistic description or first counterexample
    double seconds = 0.0;
};

// Closed forms against ray casting.
CheckResult closed_form_polytope(std::uint64_t seed, long long pairs, double tol);
CheckResult closed_form_ball(std::uint64_t seed, long long pairs, double tol);
CheckResult closed_form_hilbert_polytope(std::uint64_t seed, long long pairs, double tol);

// Weak metric axioms and structural laws.
CheckResult triangle_inequality(std::uint64_t seed, long long triples, double slack);
CheckResult nonnegativity(std::uint64_t seed, long long pairs);
CheckResult projectivity(std::uint64_t seed, long long count, double tol);
CheckResult separation(std::uint64_t seed, long long count);
CheckResult monotonicity(std::uint64_t seed, long long count, double slack);
CheckResult intersection_law(std::uint64_t seed, long long count, double tol);
CheckResult slice_restriction(std::uint64_t seed, long long count, double tol);
CheckResult hilbert_symmetry(std::uint64_t seed, long long count, double tol);
CheckResult orthant_isometry(std::uint64_t seed, long long count, double tol);
CheckResult relative_funk_identity(std::uint64_t seed, long long count, double tol);

// Convex core.
CheckResult ray_cast_consistency(std::uint64_t seed, long long count, double tol);
CheckResult exit_monotonicity(std::uint64_t seed, long long count);
CheckResult affine_equivariance(std::uint64_t seed, long long count, double tol);
CheckResult supporting_functional_validity(std::uint64_t seed, long long samples, double tol);
CheckResult intersection_hit(std::uint64_t seed, long long count, double tol);

// Triangle equality and geodesics.
CheckResult aligned_edge_triples(std::uint64_t seed, long long count, double defect_tol,
                                 double rank_tol);
CheckResult ball_triples(std::uint64_t seed, long long count, double rank_tol);
CheckResult alignment_equivalence(std::uint64_t seed, long long count, double defect_tol,
                                  double rank_tol);
CheckResult alignment_perturbation(std::uint64_t seed, long long count, double min_defect);
CheckResult geodesic_dichotomy(std::uint64_t seed, long long count);
CheckResult cone_consistency(std::uint64_t seed, long long count);
CheckResult hilbert_two_face(std::uint64_t seed, long long count);

// Balls and topology.
CheckResult forward_sphere_radius(std::uint64_t seed, long long configs, int k, double tol);
CheckResult unit_ball_forward_closed_form(std::uint64_t seed, long long configs, double tol);
CheckResult ball_similarity(std::uint64_t seed, long long configs, double tol);
CheckResult forward_ball_convexity(std::uint64_t seed, long long pairs);
CheckResult sandwich_forward(std::uint64_t seed, long long configs_per_polytope, double tol);
CheckResult sandwich_backward(std::uint64_t seed, long long configs_per_polytope, double tol);
CheckResult backward_cauchy_tail(long long k, long long terms, double threshold);
CheckResult forward_relatively_compact(std::uint64_t seed, long long configs);

// Division ratios.
CheckResult ratio_round_trip(std::uint64_t seed, long long count, double tol);

// Tangent norm.
CheckResult finite_difference_order(std::uint64_t seed, long long configs, double min_slope);
CheckResult unit_ball_identity(std::uint64_t seed, long long count, double band);
CheckResult tangent_homogeneity(std::uint64_t seed, long long count, double tol);
CheckResult tangent_subadditivity(std::uint64_t seed, long long count, double slack);
CheckResult tangent_support_formula(std::uint64_t seed, long long count, double tol);

// Projection.
CheckResult segment_feet_uniqueness(std::uint64_t seed, long long configs, int restarts,
                                    double tol);
CheckResult square_nonuniqueness(double tol);
CheckResult convex_feet_certify(std::uint64_t seed, long long count, double tol);
CheckResult bracket_monotonicity(std::uint64_t seed, long long count);
CheckResult perpendicular_consistency(std::uint64_t seed, long long rays, double tol);

// Classical oracles.
CheckResult menelaus(std::uint64_t seed, long long count, double tol);
CheckResult menelaus_sensitivity(std::uint64_t seed, long long count, double min_gap);
CheckResult ceva(std::uint64_t seed, long long count, double tol);
CheckResult cross_ratio_invariance(std::uint64_t seed, long long count, double tol);
CheckResult classical_replay_check(std::uint64_t seed, long long count, double tol);

// Invariance.
CheckResult affine_invariance(std::uint64_t seed, long long count, double tol);
CheckResult projective_invariance(std::uint64_t seed, long long count, double tol);
CheckResult reverse_funk_bound(std::uint64_t seed, long long count, double slack);

// Named batteries at default sizes, scaled by `scale`.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed,
                                   double scale = 1.0);

}  // namespace funk::checks
