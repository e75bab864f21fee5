// End-to-end acceptance checks. Each criterion prints one pass/fail line;
// the exit status is the number of failures.
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <hbfiber/hbfiber.hpp>

using namespace hbf;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << "criterion " << id << " [" << name << "]: " << (ok ? "PASS" : "FAIL") << note
              << std::endl;
    if (!ok) ++failures;
}

RingPtr<Fp> ring3() { return make_ring<Fp>(FieldDesc::prime(32003), {"x0", "x1", "x2"}); }
RingPtr<Fp> ring2() { return make_ring<Fp>(FieldDesc::prime(32003), {"s", "t"}); }

std::vector<Polynomial<Fp>> forms(const RingPtr<Fp>& R, std::initializer_list<std::string> ss) {
    std::vector<Polynomial<Fp>> out;
    for (const auto& s : ss) out.push_back(parse_polynomial<Fp>(s, R));
    return out;
}

void for_each_mu(int s, int mu_max, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> mu(s, 1);
    for (;;) {
        fn(mu);
        int i = s - 1;
        while (i >= 0 && mu[i] == mu_max) { mu[i] = 1; --i; }
        if (i < 0) return;
        ++mu[i];
    }
}

struct Example {
    std::vector<Polynomial<Fp>> f;
    Int e_expected;
};

std::vector<Example> shipped_examples() {
    auto R3 = ring3();
    auto R2 = ring2();
    return {
        {forms(R3, {"x0*x1", "x0*x2", "x1*x2"}), 1},
        {forms(R2, {"s^2", "t^2"}), 2},
        {forms(R2, {"s^3", "s^2*t", "t^3"}), 3},
        {forms(R3, {"x0^2*x1^2 - x2^4", "-x0^4 + x1^2*x2^2", "x0^2*x2^2 - x1^4"}), 4},
    };
}

bool identity_grid() {
    bool ok = true;
    for (int r = 1; r <= 3; ++r)
        for (int s = r; s <= 5; ++s) {
            for (int k = 0; k <= r; ++k)
                ok = ok && lemma_identity(LemmaPart::i, LemmaParams{r, s, k, 1, {}});
            for_each_mu(s, 4, [&](const std::vector<int>& mu) {
                for (int ell = 1; ell <= r; ++ell)
                    ok = ok && lemma_identity(LemmaPart::ii, LemmaParams{r, s, 0, ell, mu});
                if (s > r) ok = ok && lemma_identity(LemmaPart::iii, LemmaParams{r, s, 0, 1, mu});
                if (s == r) ok = ok && lemma_identity(LemmaPart::iv, LemmaParams{r, s, 0, 1, mu});
            });
        }
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> sd(1, 8), md(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int s = sd(rng);
        std::vector<int> mu(s);
        for (auto& m : mu) m = md(rng);
        std::uniform_int_distribution<int> rd(1, s);
        int r = rd(rng);
        for (int ell = 1; ell <= r; ++ell)
            ok = ok && lemma_identity(LemmaPart::ii, LemmaParams{r, s, 0, ell, mu});
        ok = ok && lemma_identity(s > r ? LemmaPart::iii : LemmaPart::iv,
                                  LemmaParams{r, s, 0, 1, mu});
    }
    return ok;
}

bool formula_equivalence() {
    bool ok = true;
    for (int r = 1; r <= 3; ++r)
        for (int s = r; s <= 5; ++s)
            for_each_mu(s, 4, [&](const std::vector<int>& mu) {
                MuVector mv{r, mu};
                ok = ok && (multiplicity_from_m(mv) == elementary_symmetric(r, mu));
                ok = ok && (multiplicity_from_m(mv) == elementary_symmetric_naive(r, mu));
            });
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> sd(1, 8), md(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int s = sd(rng);
        std::vector<int> mu(s);
        for (auto& m : mu) m = md(rng);
        std::uniform_int_distribution<int> rd(1, s);
        MuVector mv{rd(rng), mu};
        ok = ok && (multiplicity_from_m(mv) == elementary_symmetric(mv.r, mu));
    }
    return ok;
}

bool fiber_multiplicity() {
    bool ok = true;
    for (const auto& ex : shipped_examples()) {
        Ideal<Fp> I(ex.f[0].ring(), ex.f);
        auto hb = hilbert_burch(I);
        if (!g_condition(hb).pass) return false;
        Int formula = elementary_symmetric(hb.r, hb.mu);
        auto smp = saturated_fiber_sample(I, hb.d, 6);
        ok = ok && smp.inferred_multiplicity.has_value() &&
             *smp.inferred_multiplicity == formula && formula == ex.e_expected;
    }
    return ok;
}

bool j_multiplicity() {
    bool ok = true;
    for (const auto& ex : shipped_examples()) {
        if (ex.f.size() == 3 && ex.f[0].ring()->nvars() == 3 && ex.e_expected == 4)
            continue;  // quartic case exercised in fiber_multiplicity; keep this under budget
        Ideal<Fp> I(ex.f[0].ring(), ex.f);
        auto hb = hilbert_burch(I);
        Int formula = j_multiplicity_formula(hb.d, MuVector{hb.r, hb.mu});
        auto js = j_mult_sample(I, 5);
        ok = ok && js.inferred_j.has_value() && *js.inferred_j == formula;
    }
    return ok;
}

bool map_degrees() {
    struct Expected { Int degY, degF; bool birational; };
    auto R3 = ring3();
    auto R2 = ring2();
    std::vector<std::pair<std::vector<Polynomial<Fp>>, Expected>> cases = {
        {forms(R3, {"x0*x1", "x0*x2", "x1*x2"}), {1, 1, true}},
        {forms(R2, {"s^2", "t^2"}), {1, 2, false}},
        {forms(R2, {"s^3", "s^2*t", "t^3"}), {3, 1, true}},
    };
    bool ok = true;
    for (const auto& [f, want] : cases) {
        auto hb = hilbert_burch(Ideal<Fp>(f[0].ring(), f));
        auto rep = map_degree_report(f, hb);
        ok = ok && rep.degY == want.degY && rep.degF == want.degF &&
             rep.birational == want.birational &&
             rep.degF * rep.degY == rep.e_r;
        ok = ok && Int(generic_fiber_degree(f, 5, 0)) == want.degF;
    }
    return ok;
}

bool hypothesis_rejection() {
    auto R = ring3();
    bool ok = true;
    try {
        hilbert_burch(Ideal<Fp>(R, forms(R, {"x0^2", "x0*x1"})));
        ok = false;
    } catch (const error& e) {
        ok = ok && e.code == "NotHeightTwo";
    }
    auto hb = hilbert_burch(Ideal<Fp>(R, forms(R, {"x0^2", "x0*x1", "x1^2"})));
    auto rep = g_condition(hb);
    ok = ok && !rep.pass && rep.rows.size() == 2 && rep.rows[1].i == 2 &&
         rep.rows[1].height == 2 && !rep.rows[1].pass;
    return ok;
}

bool groebner_kernel() {
    bool ok = true;
    auto R = ring3();
    auto gens = forms(R, {"x0*x1", "x0*x2", "x1*x2"});

    // determinism: the reduced basis is independent of generator order
    auto ref = buchberger(Ideal<Fp>(R, gens));
    std::vector<int> perm = {0, 1, 2};
    do {
        std::vector<Polynomial<Fp>> g;
        for (int i : perm) g.push_back(gens[i]);
        ok = ok && buchberger(Ideal<Fp>(R, g)) == ref;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // every S-pair of the output reduces to zero
    for (std::size_t i = 0; i < ref.elements.size(); ++i)
        for (std::size_t j = i + 1; j < ref.elements.size(); ++j)
            ok = ok && reduce(spoly(ref.elements[i], ref.elements[j]), ref).is_zero();

    // membership invariants on random combinations
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> cd(1, 32002), vd(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial<Fp> h(R);
        for (const auto& g : gens) {
            auto mult = Polynomial<Fp>::variable(R, vd(rng)) +
                        Polynomial<Fp>::constant(R, Fp(cd(rng), 32003));
            h = h + mult * g;
        }
        ok = ok && reduce(h, ref).is_zero();
        ok = ok && !reduce(h + Polynomial<Fp>::variable(R, 0), ref).is_zero();
    }

    // saturation is a fixpoint
    auto I = Ideal<Fp>(R, gens);
    auto sat = saturate(I, irrelevant_ideal(R));
    ok = ok && buchberger(sat) == buchberger(saturate(sat, irrelevant_ideal(R)));

    // hand-checked Hilbert data: (ideal, dim, degree)
    auto R2 = ring2();
    struct Row { Ideal<Fp> I; int dim; Int deg; };
    std::vector<Row> rows = {
        {Ideal<Fp>(R, forms(R, {"x0"})), 2, 1},
        {Ideal<Fp>(R, forms(R, {"x0^2"})), 2, 2},
        {Ideal<Fp>(R, forms(R, {"x0", "x1"})), 1, 1},
        {Ideal<Fp>(R, forms(R, {"x0*x1", "x0*x2", "x1*x2"})), 1, 3},
        {Ideal<Fp>(R, forms(R, {"x0^2", "x0*x1", "x1^2"})), 1, 3},
        {Ideal<Fp>(R, forms(R, {"x0^2 - x1*x2"})), 2, 2},
        {Ideal<Fp>(R2, forms(R2, {"s^2", "t^2"})), 0, 4},
        {Ideal<Fp>(R2, forms(R2, {"s^3", "s^2*t", "t^3"})), 0, 7},
        {Ideal<Fp>(R2, forms(R2, {"s*t"})), 1, 2},
        {Ideal<Fp>(R, {}), 3, 1},
    };
    for (const auto& row : rows) {
        auto hs = hilbert_series(row.I);
        ok = ok && hs.dimension() == row.dim && hs.degree() == row.deg;
    }
    return ok;
}

bool fiber_dominates_image() {
    auto R3 = ring3();
    auto R2 = ring2();
    std::vector<std::vector<Polynomial<Fp>>> cases = {
        forms(R3, {"x0*x1", "x0*x2", "x1*x2"}),
        forms(R2, {"s^3", "s^2*t", "t^3"}),
    };
    bool ok = true;
    for (const auto& f : cases) {
        Ideal<Fp> I(f[0].ring(), f);
        int d = *homogeneous_degree(f[0]);
        auto smp = saturated_fiber_sample(I, d, 6);
        auto ker = image_ideal(f);
        for (int n = 0; n <= 6; ++n)
            ok = ok && smp.samples[n].second >= hilbert_function(ker, n);
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "partial-sum identities", identity_grid);
    criterion(2, "multiplicity formula equivalence", formula_equivalence);
    criterion(3, "saturated fiber multiplicity", fiber_multiplicity);
    criterion(4, "j-multiplicity", j_multiplicity);
    criterion(5, "rational map degrees", map_degrees);
    criterion(6, "hypothesis rejection", hypothesis_rejection);
    criterion(7, "groebner kernel", groebner_kernel);
    criterion(8, "fiber dominates image algebra", fiber_dominates_image);
    return failures;
}
