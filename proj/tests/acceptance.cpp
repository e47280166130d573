// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <addikit/addikit.hpp>

using namespace addikit;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) passed = false;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "FAILED ") + what;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(std::uint64_t v) { return std::to_string(v); }

Verdict example_63() {
    Verdict v;
    const auto start = Clock::now();
    const auto r = construct_b(TowerContext::for_q(2, 3, 2, 2));
    const double t = seconds_since(start);
    v.require(r.code.n() == 63, "n=" + num(r.code.n()));
    v.require(rank(r.code.expanded()) == 10, "F_q-rank=" + num(rank(r.code.expanded())));
    v.require(r.exact_d && *r.exact_d >= 45, "d=" + (r.exact_d ? num(*r.exact_d) : std::string("n/a")) + " >= 45");
    v.require(t < 5.0, "runtime " + std::to_string(t) + " s < 5 s");
    return v;
}

Verdict bound_grid() {
    Verdict v;
    const auto start = Clock::now();
    for (const auto& [q, s, t, h] : std::vector<std::array<std::uint32_t, 4>>{
             {2, 2, 2, 1}, {2, 2, 2, 2}, {2, 3, 2, 2}, {2, 3, 2, 3}, {3, 2, 2, 2}}) {
        const auto r = construct_b(TowerContext::for_q(q, s, t, h));
        const std::uint64_t n = r.code.n();
        // Bound recomputed here from its closed form.
        std::uint64_t qs = 1;
        for (std::uint32_t i = 0; i < s; ++i) qs *= q;
        std::uint64_t qsh = 1;
        for (std::uint32_t i = 0; i < s - h; ++i) qsh *= q;
        const auto bound = static_cast<std::int64_t>(n - n / (qs - 1) * qsh);
        const bool ok = r.exact_d && static_cast<std::int64_t>(*r.exact_d) >= bound;
        v.require(ok, "(" + num(q) + "," + num(s) + "," + num(t) + "," + num(h) + ") d=" +
                          (r.exact_d ? num(*r.exact_d) : std::string("n/a")) + " >= " + std::to_string(bound));
    }
    const double t = seconds_since(start);
    v.require(t < 120.0, "runtime " + std::to_string(t) + " s < 120 s");
    return v;
}

Verdict optimality() {
    Verdict v;
    const auto c = additive_griesmer_check(15, 7, 2, 2, 12);
    v.require(!c.feasible, "d=12 infeasible (rhs " + std::to_string(c.rhs) + ")");
    v.require(c.m == 3 && c.k == 4 && c.r0 == 1, "m=" + num(c.m) + " k=" + num(c.k) + " r_0=" + num(c.r0));
    v.require(c.ceil_term == 4, "ceil(d/f)=" + std::to_string(c.ceil_term) + " = q^h");
    const auto max_d = additive_griesmer_max_d(15, 7, 2, 2);
    v.require(max_d == 11, "max_d=" + num(max_d) + " == 11");
    const auto r = construct_b(TowerContext::for_q(2, 2, 2, 2));
    v.require(r.exact_d && *r.exact_d <= 11, "constructed d=" + (r.exact_d ? num(*r.exact_d) : std::string("n/a")) + " <= 11");
    return v;
}

Verdict equality_21() {
    Verdict v;
    const auto c = additive_griesmer_check(21, 6, 2, 3, 18);
    v.require(c.feasible, "feasible");
    v.require(c.rhs == 21, "rhs=" + std::to_string(c.rhs) + " == n");
    return v;
}

Verdict construction_a() {
    Verdict v;
    const auto start = Clock::now();
    const auto code = codes::hamming74();
    const auto sf = desarguesian_partial_semifield(code.field(), 4, 2);
    const auto r = construct_a(code, sf, Extension(code.field(), Field::create(2, 2)));
    const auto d2 = ghw(code, 2);
    v.require(r.actual_d && *r.actual_d >= d2 && d2 == 5,
              "d=" + (r.actual_d ? num(*r.actual_d) : std::string("n/a")) + " >= d_2=" + num(d2));
    const auto hierarchy = ghw_hierarchy(code);
    v.require(hierarchy == std::vector<std::size_t>{3, 5, 6, 7}, "ghw hierarchy (3,5,6,7)");
    bool below = true;
    std::string bounds;
    for (std::size_t j = 1; j <= 4; ++j) {
        const auto b = ghw_lower_bound(j, 3, 2);
        bounds += (j > 1 ? "," : "") + num(b);
        below = below && b <= hierarchy[j - 1];
    }
    v.require(below && bounds == "3,5,6,7", "bounds (" + bounds + ") <= exact");
    const double t = seconds_since(start);
    v.require(t < 10.0, "runtime " + std::to_string(t) + " s < 10 s");
    return v;
}

// n - |V^perp ∩ X| with V spanned by v A_1, ..., v A_h.
std::size_t identity_weight(const LinearCode& code, const PartialSemifield& sf, const Vector& v) {
    Matrix span(code.field(), 0, code.k());
    for (const auto& a : sf.matrices()) span.append_row(vec_mul(v, a));
    return code.n() - code.perp_count(Subspace::from_generators(span));
}

Verdict weight_identity() {
    Verdict v;
    const Field F2 = Field::create(2, 1), F3 = Field::create(3, 1);
    std::vector<Vector> ham15_parity;
    for (Rep c = 1; c < 16; ++c) ham15_parity.push_back({c & 1u, (c >> 1) & 1u, (c >> 2) & 1u, (c >> 3) & 1u});
    Matrix parity(F2, 4, 15);
    for (std::size_t c = 0; c < 15; ++c)
        for (std::size_t r = 0; r < 4; ++r) parity(r, c) = ham15_parity[c][r];
    const LinearCode ham15(Matrix::from_rows(F2, nullspace(parity)));
    const LinearCode ternary(Matrix::from_rows(F3, {{1, 0, 0, 0, 1, 1, 2, 0},
                                                    {0, 1, 0, 0, 2, 1, 0, 1},
                                                    {0, 0, 1, 0, 1, 0, 1, 1},
                                                    {0, 0, 0, 1, 0, 2, 1, 2}}));
    const std::vector<std::pair<LinearCode, std::uint32_t>> cases = {
        {codes::hamming74(), 2}, {codes::hamming74(), 3}, {codes::simplex73(), 2}, {ternary, 2}, {ham15, 2}};
    std::mt19937_64 rng(0x5eed);
    std::uint64_t checked = 0, mismatches = 0;
    for (const auto& [code, h] : cases) {
        const Field& F = code.field();
        const auto sf = desarguesian_partial_semifield(F, code.k(), h);
        const auto r = construct_a(code, sf, Extension(F, Field::create(F.characteristic(), h)), {.verify = false});
        const auto check = [&](const Vector& m) {
            ++checked;
            if (weight(r.code.codeword(m)) != identity_weight(code, sf, m)) ++mismatches;
        };
        for (int i = 0; i < 200; ++i) {
            Vector m(code.k());
            for (auto& x : m) x = static_cast<Rep>(rng() % F.order());
            check(m);
        }
        const auto total = arith::checked_pow(F.order(), code.k());
        if (total && *total <= 1024)
            for (std::uint64_t i = 0; i < *total; ++i) check(affine_vector(F.order(), code.k(), i));
    }
    v.require(mismatches == 0, num(mismatches) + " mismatches in " + num(checked) + " vectors");
    return v;
}

Verdict hyperplane_cap() {
    Verdict v;
    for (const auto& [s, cap] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 5}, {3, 18}}) {
        const auto ctx = TowerContext::for_q(2, s, 2, 2);
        const auto count = max_hyperplane_zero_count(ctx, choose_lambdas(ctx));
        v.require(count <= cap, "(2," + num(s) + ",2,2) max=" + num(count) + " <= " + num(cap));
    }
    return v;
}

Verdict nonlinear() {
    Verdict v;
    const auto start = Clock::now();
    const auto target_ctx = TowerContext::for_q(2, 3, 2, 2);
    const auto target = certify_nonlinear(build_norm_trace_family(target_ctx, choose_lambdas(target_ctx)), 3);
    v.require(target.reason == CertificateReason::RankWitness && target.witness.size() <= 3 && target.rank % 2 != 0,
              "(2,3,2,2) witness of size " + num(target.witness.size()) + " rank " + num(target.rank));
    std::size_t grid = 0, certified = 0;
    for (std::uint32_t s = 2; s <= 4; ++s)
        for (std::uint32_t h = 2; h <= s; ++h) {
            const auto ctx = TowerContext::for_q(2, s, 2, h);
            ++grid;
            if (certify_nonlinear(build_norm_trace_family(ctx, choose_lambdas(ctx)), 3).verdict == LinearityVerdict::Nonlinear)
                ++certified;
        }
    v.require(certified == grid, num(certified) + "/" + num(grid) + " grid points certified");
    const Extension ext(Field::create(2, 1), Field::create(2, 2));
    const auto control = linear_code_family(Matrix::from_rows(ext.field(), {{1, 0, 1, 1, 1}, {0, 1, 1, 2, 3}}), ext);
    const auto c = certify_nonlinear(control, 3);
    v.require(c.verdict == LinearityVerdict::Inconclusive, "F_4-linear control has no witness");
    const double t = seconds_since(start);
    v.require(t < 120.0, "runtime " + std::to_string(t) + " s < 120 s");
    return v;
}

Verdict field_engine() {
    Verdict v;
    std::uint64_t failures = 0, fields = 0;
    for (std::uint32_t p = 2; p < 256; ++p) {
        if (!arith::is_prime(p)) continue;
        for (std::uint32_t m = 1, order = p; order <= 256; ++m, order *= p) {
            ++fields;
            const Field F = Field::create(p, m);
            for (Rep a = 0; a < order; ++a) {
                failures += F.add(a, F.neg(a)) != 0;
                failures += F.mul(a, 1) != a;
                failures += F.add(a, 0) != a;
                if (a != 0) failures += F.mul(a, F.inv(a)) != 1;
                for (Rep b = 0; b < order; ++b) {
                    failures += F.add(a, b) != F.add(b, a);
                    failures += F.mul(a, b) != F.mul(b, a);
                    for (Rep c = 0; c < order; ++c) {
                        failures += F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c));
                        failures += F.add(F.add(a, b), c) != F.add(a, F.add(b, c));
                        failures += F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c));
                    }
                }
            }
        }
    }
    v.require(failures == 0, num(failures) + " axiom failures over " + num(fields) + " fields");

    std::uint64_t tower_failures = 0, towers = 0;
    for (const auto& [q, s, t] : std::vector<std::array<std::uint32_t, 3>>{
             {2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {2, 2, 3}, {2, 3, 4}, {2, 4, 3}, {2, 6, 2}, {3, 1, 2},
             {3, 2, 2}, {3, 1, 7}, {4, 2, 3}, {5, 1, 5}, {7, 2, 2}, {8, 2, 2}, {16, 1, 3}, {64, 1, 2}}) {
        const auto ctx = TowerContext::for_q(q, s, t, 1);
        ++towers;
        for (const Extension* ext : {&ctx.q_to_s(), &ctx.s_to_st(), &ctx.q_to_st()}) {
            const Field& K = ext->base();
            const Field& L = ext->field();
            std::map<Rep, std::uint64_t> tr, nm;
            for (Rep l = 0; l < L.order(); ++l) {
                ++tr[ext->trace(l)];
                if (l != 0) ++nm[ext->norm(l)];
            }
            tower_failures += tr.size() != K.order();
            for (const auto& [k, c] : tr) tower_failures += c != L.order() / K.order();
            tower_failures += nm.size() != K.order() - 1;
            for (const auto& [k, c] : nm) tower_failures += c != (L.order() - 1) / (K.order() - 1);
            for (Rep a = 0; a < K.order(); ++a)
                for (Rep b = 0; b < K.order(); ++b) {
                    tower_failures += ext->embed(K.add(a, b)) != L.add(ext->embed(a), ext->embed(b));
                    tower_failures += ext->embed(K.mul(a, b)) != L.mul(ext->embed(a), ext->embed(b));
                }
        }
    }
    v.require(tower_failures == 0, num(tower_failures) + " trace/norm/embedding failures over " + num(towers) + " towers");
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"example-63 reproduction", example_63},
        {"norm/trace bound on the grid", bound_grid},
        {"optimality at (q,h)=(2,2)", optimality},
        {"[21, 3, 18]_3^2 equality", equality_21},
        {"Construction A guarantee", construction_a},
        {"weight identity", weight_identity},
        {"hyperplane-count cap", hyperplane_cap},
        {"non-linearity certificates", nonlinear},
        {"field engine properties", field_engine},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.passed = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failed += !v.passed;
        std::printf("%s criterion %zu (%s): %s\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
