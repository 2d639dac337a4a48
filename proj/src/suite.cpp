#include "milnor/suite.hpp"

#include <optional>
#include <random>
#include <sstream>

#include "milnor/deformation.hpp"
#include "milnor/error.hpp"
#include "milnor/graded_ideal.hpp"
#include "milnor/inverse_system.hpp"
#include "milnor/poly_io.hpp"
#include "milnor/reconstruction.hpp"
#include "milnor/st_analysis.hpp"

namespace milnor {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExhausted {};

// Collects failures for one criterion; the first few are kept as detail.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++cases_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) messages_.push_back(what);
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        std::ostringstream out;
        out << cases_ - failures_ << "/" << cases_ << " checks";
        for (const auto& m : messages_) out << "; " << m;
        return out.str();
    }

private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> messages_;
};

std::string where(int n, int d, int index, int k) {
    std::ostringstream out;
    out << "(n=" << n << ",d=" << d << ") #" << index;
    if (k >= 0) out << " k=" << k;
    return out.str();
}

class Runner {
public:
    explicit Runner(const SuiteConfig& config) : config_(config), start_(Clock::now()) {}

    void poll() const {
        if (config_.budget <= 0) return;
        const std::chrono::duration<double> elapsed = Clock::now() - start_;
        if (elapsed.count() > config_.budget) throw BudgetExhausted{};
    }

    GeneratorTuple ci_tuple(int n, int d, int i) const {
        return random_ci_tuple(n, d, case_seed(config_.seed, 3, n, d, i));
    }
    HomogeneousPolynomial smooth_form(int n, int d, int i) const {
        return random_smooth(n, d, case_seed(config_.seed, 2, n, d, i), false);
    }
    HomogeneousPolynomial non_st_form(int n, int d, int i) const {
        return random_smooth(n, d, case_seed(config_.seed, 4, n, d, i), true);
    }

    void hilbert(Tally& t) const {
        const auto values = [](int n, int d) { return hilbert_profile(n, d).values; };
        using V = std::vector<std::size_t>;
        t.check(values(2, 3) == V{1, 3, 3, 1, 0}, "profile (2,3)");
        t.check(values(2, 4) == V{1, 3, 6, 7, 6, 3, 1, 0}, "profile (2,4)");
        t.check(values(1, 3) == V{1, 2, 1, 0}, "profile (1,3)");
        for (int n = 1; n <= 3; ++n) {
            for (int d = 2; d <= 6; ++d) {
                const auto& p = hilbert_profile(n, d);
                std::size_t total = 0;
                bool symmetric = true;
                for (int k = 0; k <= p.socle; ++k) {
                    total += p.a(k);
                    symmetric = symmetric && p.a(k) == p.a(p.socle - k);
                }
                std::size_t expected = 1;
                for (int i = 0; i <= n; ++i) expected *= static_cast<std::size_t>(d - 1);
                t.check(symmetric, "symmetry " + where(n, d, 0, -1));
                t.check(total == expected, "total length " + where(n, d, 0, -1));
                t.check(p.a(p.socle + 1) == 0, "vanishing past T " + where(n, d, 0, -1));
            }
        }
    }

    void jacobian_dimensions(Tally& t) const {
        for (const auto& [n, d] : config_.sizes) {
            const auto& p = hilbert_profile(n, d);
            for (int i = 0; i < config_.jacobian_forms; ++i) {
                poll();
                const auto f = smooth_form(n, d, i);
                for (int k = 0; k <= p.socle + 1; ++k) {
                    t.check(jacobian_piece(f, k).dim() == graded_dim(n, k) - p.a(k), where(n, d, i, k));
                }
            }
        }
    }

    void generator_round_trip(Tally& t) const {
        for (const auto& [n, d] : config_.sizes) {
            const int top = socle_degree(n, d);
            std::vector<GeneratorTuple> pool;
            for (int i = 0; i < config_.ci_tuples; ++i) pool.push_back(ci_tuple(n, d, i));
            for (int i = 0; i < config_.ci_tuples; ++i) {
                for (int k = d - 1; k <= top; ++k) {
                    poll();
                    const auto back = recover_generators(ideal_piece(pool[i], k), k, n, d);
                    t.check(back.span() == pool[i].span(), "recovery " + where(n, d, i, k));
                }
            }
            // Pairs (i, i+1), extending the pool when the counts ask for more.
            for (int j = 0; j < config_.distinct_pairs; ++j) {
                while (static_cast<int>(pool.size()) < j + 2) pool.push_back(ci_tuple(n, d, static_cast<int>(pool.size())));
                const auto& u = pool[j];
                const auto& w = pool[j + 1];
                t.check(u.span() != w.span(), "pair not distinct " + where(n, d, j, -1));
                for (int k = d - 1; k <= top; ++k) {
                    poll();
                    t.check(ideal_piece(u, k) != ideal_piece(w, k), "separation " + where(n, d, j, k));
                }
            }
        }
    }

    void polynomial_round_trip(Tally& t) const {
        for (const auto& [n, d] : config_.sizes) {
            const int top = socle_degree(n, d);
            for (int i = 0; i < config_.non_st_forms; ++i) {
                const auto f = non_st_form(n, d, i);
                for (int k = d - 1; k <= top; ++k) {
                    poll();
                    const auto result = reconstruct_poly(jacobian_piece(f, k), k, n, d);
                    t.check(result.s() == 1 && result.basis.front().normalized() == f.normalized(),
                            "reconstruction " + where(n, d, i, k));
                }
            }
        }
    }

    void fibers(Tally& t) const {
        const auto fermat = parse_polynomial("x0^3 + x1^3 + x2^3", 2);
        const auto result = fiber(jacobian_gens(fermat));
        const std::vector<HomogeneousPolynomial> cubes{parse_polynomial("x0^3", 2), parse_polynomial("x1^3", 2),
                                                       parse_polynomial("x2^3", 2)};
        t.check(result.s() == 3, "Fermat cubic s");
        t.check(result.subspace() == Subspace::span(cubes), "Fermat cubic fiber");

        const auto g = embed(random_smooth(1, 4, case_seed(config_.seed, 5, 1, 4, 0), true), 3, 0);
        const auto h = embed(random_smooth(1, 4, case_seed(config_.seed, 5, 1, 4, 1), true), 3, 2);
        const auto split = fiber(jacobian_gens(g + h));
        t.check(split.s() == 2, "g+h s");
        t.check(split.subspace() == Subspace::span(std::vector<HomogeneousPolynomial>{g, h}), "g+h fiber");
    }

    void inverse_systems(Tally& t) const {
        const GeneratorTuple squares(2, 3, {parse_polynomial("x0^2", 2), parse_polynomial("x1^2", 2),
                                            parse_polynomial("x2^2", 2)});
        t.check(associated_form(squares).form == parse_polynomial("x0*x1*x2", 2), "squares");
        for (const auto& [n, d] : config_.sizes) {
            for (int i = 0; i < config_.ci_tuples; ++i) {
                poll();
                t.check(verify_inverse_system(ci_tuple(n, d, i)), "inverse system " + where(n, d, i, -1));
            }
        }
    }

    void differentials(Tally& t) const {
        for (const auto& [n, d] : config_.sizes) {
            const int top = socle_degree(n, d);
            for (int i = 0; i < config_.ci_tuples; ++i) {
                const auto w = ci_tuple(n, d, i);
                for (int k = d - 1; k <= top; ++k) {
                    poll();
                    t.check(dpsi_W_kernel(w, k).kernel_dim == 0, "W kernel " + where(n, d, i, k));
                }
            }
            for (int i = 0; i < config_.non_st_forms; ++i) {
                const auto f = non_st_form(n, d, i);
                for (int k = d - 1; k <= top; ++k) {
                    poll();
                    t.check(dpsi_f_kernel(f, k).kernel_dim == 0, "f kernel " + where(n, d, i, k));
                }
            }
        }
        const auto fermat = parse_polynomial("x0^3 + x1^3 + x2^3", 2);
        t.check(dpsi_f_kernel(fermat, 2).kernel_dim >= 2, "Fermat cubic kernel");
    }

    void containment(Tally& t) const {
        for (const auto& [n, d] : config_.sizes) {
            const int top = socle_degree(n, d);
            std::vector<HomogeneousPolynomial> probes;
            for (int j = 0; j < config_.containment_forms; ++j) {
                probes.push_back(random_form(n, d, case_seed(config_.seed, 8, n, d, j), 3));
            }
            for (int i = 0; i < config_.non_st_forms; ++i) {
                const auto f = non_st_form(n, d, i);
                for (int k = d - 1; k <= top; ++k) {
                    poll();
                    const auto piece = jacobian_piece(f, k);
                    // A multiple of f must pass, otherwise the check is vacuous.
                    t.check(contains(piece, jacobian_span_piece(f * Rational(-2), k)), "control " + where(n, d, i, k));
                    for (const auto& h : probes) {
                        const bool inside = contains(piece, jacobian_span_piece(h, k));
                        t.check(!inside || h.normalized() == f.normalized(), "containment " + where(n, d, i, k));
                    }
                }
            }
        }
    }

    // Only degrees k >= 2(d-1) carry syzygies among the products u·w_i.
    void well_defined(Tally& t, std::string& note) const {
        std::vector<std::tuple<int, int, int>> triples;
        for (const auto& [n, d] : config_.sizes) {
            for (int k = 2 * (d - 1); k <= socle_degree(n, d); ++k) triples.emplace_back(n, d, k);
        }
        if (triples.empty()) {
            note = "no (n,d,k) with syzygies among the selected sizes";
            return;
        }
        std::mt19937_64 rng(case_seed(config_.seed, 9, 0, 0, 0));
        for (int i = 0; i < config_.well_defined_pairs; ++i) {
            poll();
            const auto [n, d, k] = triples[static_cast<std::size_t>(i) % triples.size()];
            const auto w = random_ci_tuple(n, d, case_seed(config_.seed, 9, n, d, i));
            const auto rep = represent_piece(w, k);
            std::vector<HomogeneousPolynomial> h;
            for (int j = 0; j <= n; ++j) h.push_back(random_form(n, d - 1, case_seed(config_.seed, 9, n, d, 1000 * i + j), 3));
            const auto& u = rep.coefficients[rng() % rep.coefficients.size()];
            auto alt = u;
            for (const auto& syz : rep.syzygies) {
                const Rational c(static_cast<long>(rng() % 7) - 3);
                for (std::size_t j = 0; j < alt.size(); ++j) alt[j] = alt[j] + syz[j] * c;
            }
            const bool same_element = apply_representation(alt, w.gens()) == apply_representation(u, w.gens());
            const bool moved = alt != u;
            const auto gap = apply_representation(alt, h) - apply_representation(u, h);
            t.check(same_element && moved && rep.piece.contains_polynomial(gap), "pair " + where(n, d, i, k));
        }
    }

    const SuiteConfig& config_;
    Clock::time_point start_;
};

}  // namespace

const char* status_name(CaseStatus status) {
    switch (status) {
        case CaseStatus::pass: return "PASS";
        case CaseStatus::fail: return "FAIL";
        case CaseStatus::skip: return "SKIP";
    }
    return "?";
}

std::uint64_t case_seed(std::uint64_t base, int criterion, int n, int d, int index) {
    // splitmix64 over the packed case key
    std::uint64_t z = base ^ (static_cast<std::uint64_t>(criterion) << 56) ^ (static_cast<std::uint64_t>(n) << 48) ^
                      (static_cast<std::uint64_t>(d) << 40) ^ static_cast<std::uint64_t>(index);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<CriterionResult> run_suite(const SuiteConfig& config,
                                       const std::function<void(const CriterionResult&)>& on_result) {
    const Runner runner(config);
    std::vector<CriterionResult> results;
    bool exhausted = false;

    const auto run = [&](int id, const char* title, auto&& body) {
        CriterionResult r;
        r.id = id;
        r.title = title;
        if (static_cast<std::size_t>(id) < config.time_limits.size()) r.time_limit = config.time_limits[id];
        if (exhausted) {
            r.status = CaseStatus::skip;
            r.detail = "budget exhausted";
        } else {
            Tally tally;
            std::string note;
            const auto begin = Clock::now();
            try {
                body(tally, note);
                r.status = tally.ok() ? CaseStatus::pass : CaseStatus::fail;
                r.detail = note.empty() ? tally.summary() : note;
                if (!note.empty() && tally.ok()) r.status = CaseStatus::skip;
            } catch (const BudgetExhausted&) {
                exhausted = true;
                r.status = CaseStatus::fail;
                r.detail = "budget exhausted; " + tally.summary();
            } catch (const std::exception& e) {
                r.status = CaseStatus::fail;
                r.detail = std::string("error: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(Clock::now() - begin).count();
            if (r.status == CaseStatus::pass && r.time_limit > 0 && r.seconds >= r.time_limit) {
                r.status = CaseStatus::fail;
                r.detail += "; over time limit";
            }
        }
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    };

    const auto plain = [](auto member) {
        return [member](const Runner& self, Tally& t, std::string&) { (self.*member)(t); };
    };
    const auto bind = [&](auto fn) { return [&, fn](Tally& t, std::string& note) { fn(runner, t, note); }; };

    run(1, "Hilbert profiles", bind(plain(&Runner::hilbert)));
    run(2, "Jacobian piece dimensions", bind(plain(&Runner::jacobian_dimensions)));
    run(3, "generator recovery and separation", bind(plain(&Runner::generator_round_trip)));
    run(4, "polynomial reconstruction", bind(plain(&Runner::polynomial_round_trip)));
    run(5, "fibers of direct sums", bind(plain(&Runner::fibers)));
    run(6, "inverse systems", bind(plain(&Runner::inverse_systems)));
    run(7, "injective differentials", bind(plain(&Runner::differentials)));
    run(8, "containment forces equality", bind(plain(&Runner::containment)));
    run(9, "tangent map well-defined", bind([](const Runner& self, Tally& t, std::string& note) {
            self.well_defined(t, note);
        }));
    return results;
}

}  // namespace milnor
