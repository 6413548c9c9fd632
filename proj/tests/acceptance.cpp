// One line per acceptance criterion, PASS or FAIL, at the full sample sizes.
// Thresholds are fixed here; the exit status is nonzero when any line fails.

#include "funk/checks.hpp"
#include "funk/classical_oracles.hpp"
#include "funk/metric_engine.hpp"

#include <chrono>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace {

using funk::checks::CheckResult;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 0;

struct Line {
    bool pass = true;
    std::string detail;

    void add(const CheckResult& r) {
        pass = pass && r.pass;
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s%s n=%lld worst=%.6g (threshold %.3g)",
                      detail.empty() ? "" : "; ", r.name.c_str(), r.count, r.worst, r.threshold);
        detail += buf;
        if (!r.pass) detail += " [" + r.note + "]";
    }

    void add(const std::string& label, bool ok) {
        pass = pass && ok;
        detail += (detail.empty() ? "" : "; ") + label + (ok ? "" : " [failed]");
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

Line ac1() {
    Line l;
    auto start = Clock::now();
    l.add(funk::checks::closed_form_polytope(kSeed, 10000, 1e-9));
    l.add(funk::checks::closed_form_ball(kSeed, 10000, 1e-9));
    double s = seconds_since(start);
    l.add(fmt("%.2f s (limit %.0f s)", s, 5.0), s < 5.0);
    return l;
}

Line ac2() {
    Line l;
    auto start = Clock::now();
    l.add(funk::checks::nonnegativity(kSeed, 100000));
    l.add(funk::checks::triangle_inequality(kSeed, 100000, 1e-12));
    l.add(funk::checks::projectivity(kSeed, 10000, 1e-9));
    double s = seconds_since(start);
    l.add(fmt("%.2f s (limit %.0f s)", s, 10.0), s < 10.0);
    return l;
}

Line ac3() {
    Line l;
    l.add(funk::checks::aligned_edge_triples(kSeed, 10000, 1e-9, 1e-7));
    l.add(funk::checks::ball_triples(kSeed, 10000, 1e-7));
    l.add(funk::checks::alignment_equivalence(kSeed, 10000, 1e-9, 1e-7));
    return l;
}

Line ac4() {
    Line l;
    l.add(funk::checks::forward_sphere_radius(kSeed, 100, 16, 1e-8));
    l.add(funk::checks::unit_ball_forward_closed_form(kSeed, 200, 1e-9));
    return l;
}

Line ac5() {
    Line l;
    l.add(funk::checks::sandwich_forward(kSeed, 100, 1e-9));
    l.add(funk::checks::sandwich_backward(kSeed, 100, 1e-9));
    return l;
}

Line ac6() {
    Line l;
    l.add(funk::checks::backward_cauchy_tail(1000, 100000, 1e-3));
    l.add(funk::checks::forward_relatively_compact(kSeed, 50));
    return l;
}

Line ac7() {
    Line l;
    // Interval (-1, 1) with x = 0, y = 0.5, z = 0.75.
    const double t = funk::ratio_from_distances(std::log(2.0), std::log(4.0));
    const double back = funk::distance_from_ratio(std::log(2.0), 1.5);
    l.add(fmt("worked instance t=%.15g, F(x,z)=%.15g", t, back),
          std::abs(t - 1.5) <= 1e-10 && std::abs(back - std::log(4.0)) <= 1e-10);
    l.add(funk::checks::ratio_round_trip(kSeed, 10000, 1e-10));
    return l;
}

Line ac8() {
    Line l;
    l.add(funk::checks::finite_difference_order(kSeed, 200, 0.9));
    l.add(funk::checks::unit_ball_identity(kSeed, 10000, 1e-7));
    return l;
}

Line ac9() {
    Line l;
    l.add(funk::checks::segment_feet_uniqueness(kSeed, 20, 100, 1e-8));
    l.add(funk::checks::square_nonuniqueness(1e-9));
    l.add("square witness: feet (0.5, 0.25) and (0.5, -0.25) of A = [0.5, 0.9] x [-0.25, 0.25] "
          "from x = 0",
          true);
    l.add(funk::checks::convex_feet_certify(kSeed, 200, 1e-9));
    return l;
}

Line ac10() {
    Line l;
    using funk::Point;
    auto p2 = [](double a, double b) {
        Point p(2);
        p << a, b;
        return p;
    };
    const double hand = funk::menelaus_product(p2(0, 0), p2(1, 0), p2(0, 1), p2(1.5, -0.5),
                                               p2(0, 0.25), p2(0.5, 0));
    l.add(fmt("hand instance (1/3)(-3)(-1) = %.15g", hand), std::abs(hand - 1.0) <= 1e-9);
    l.add(funk::checks::menelaus(kSeed, 1000, 1e-9));
    l.add(funk::checks::menelaus_sensitivity(kSeed, 1000, 1e-4));
    l.add(funk::checks::ceva(kSeed, 1000, 1e-9));
    l.add(funk::checks::cross_ratio_invariance(kSeed, 1000, 1e-9));
    return l;
}

Line ac11() {
    Line l;
    l.add(funk::checks::affine_invariance(kSeed, 1000, 1e-9));
    l.add(funk::checks::projective_invariance(kSeed, 1000, 1e-9));
    l.add(funk::checks::reverse_funk_bound(kSeed, 10000, 1e-9));
    return l;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Line()>>> criteria = {
        {"AC1 closed forms vs ray cast", ac1},
        {"AC2 weak metric axioms", ac2},
        {"AC3 triangle equality iff alignment", ac3},
        {"AC4 ball homothety", ac4},
        {"AC5 topology sandwich", ac5},
        {"AC6 completeness witnesses", ac6},
        {"AC7 division ratio calculus", ac7},
        {"AC8 tangent norm", ac8},
        {"AC9 projection", ac9},
        {"AC10 Menelaus, Ceva and cross ratio", ac10},
        {"AC11 invariance", ac11},
    };
    int failures = 0;
    auto start = Clock::now();
    for (const auto& [label, run] : criteria) {
        Line l;
        try {
            l = run();
        } catch (const std::exception& e) {
            l.add(std::string("exception: ") + e.what(), false);
        }
        if (!l.pass) ++failures;
        std::printf("%s %s: %s\n", l.pass ? "PASS" : "FAIL", label, l.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed in %.1f s\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(),
                seconds_since(start));
    return failures == 0 ? 0 : 1;
}
