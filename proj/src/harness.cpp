#include "posmap/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "posmap/io.hpp"
#include "posmap/measures.hpp"
#include "posmap/rng.hpp"
#include "posmap/superop.hpp"
#include "posmap/synthesis.hpp"

namespace posmap {

namespace {

CMatrix haar_unitary(int n, SplitMix64& rng) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian_pair();
    // modified Gram-Schmidt, two orthogonalization passes; positive R
    // diagonal comes for free, which is exactly the Haar phase fix
    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i < j; ++i) {
                cplx dot = 0.0;
                for (int r = 0; r < n; ++r) dot += std::conj(g(r, i)) * g(r, j);
                for (int r = 0; r < n; ++r) g(r, j) -= dot * g(r, i);
            }
        }
        double norm2 = 0.0;
        for (int r = 0; r < n; ++r) norm2 += std::norm(g(r, j));
        if (norm2 < 1e-16) {
            for (int r = 0; r < n; ++r) g(r, j) = rng.gaussian_pair();
            --j;
            continue;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < n; ++r) g(r, j) *= inv;
    }
    return g;
}

HermitianMatrix from_spectrum(std::span<const double> eigs, const CMatrix& v) {
    const int n = v.rows();
    CMatrix a(n, n);
    for (int l = 0; l < n; ++l) {
        const double lam = eigs[static_cast<std::size_t>(l)];
        if (lam == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) += lam * v(i, l) * std::conj(v(j, l));
    }
    return HermitianMatrix::symmetrized(a);
}

// strictly positive parts summing to total
std::vector<double> simplex_split(double total, int parts, SplitMix64& rng) {
    std::vector<double> w(static_cast<std::size_t>(parts));
    double sum = 0.0;
    for (double& v : w) {
        v = -std::log(rng.uniform01() + 1e-300);
        sum += v;
    }
    for (double& v : w) v = total * (v / sum);
    return w;
}

std::vector<double> indefinite_eigs(int n, SplitMix64& rng) {
    std::vector<double> e(static_cast<std::size_t>(n));
    for (double& v : e) v = rng.uniform(-1.0, 1.0);
    e[0] = 0.1 + 0.9 * rng.uniform01();
    e[1] = -(0.1 + 0.9 * rng.uniform01());
    return e;
}

}  // namespace

HermitianMatrix random_hermitian(int n, SpectrumLaw law, std::uint64_t seed,
                                 std::span<const double> prescribed) {
    if (n < 1) throw std::invalid_argument("random_hermitian: n must be >= 1");
    SplitMix64 rng = derive_stream(seed, 0x8e1fULL);
    std::vector<double> eigs;
    switch (law) {
        case SpectrumLaw::uniform:
            eigs.resize(static_cast<std::size_t>(n));
            for (double& v : eigs) v = rng.uniform(-1.0, 1.0);
            break;
        case SpectrumLaw::prescribed:
            if (static_cast<int>(prescribed.size()) != n)
                throw std::invalid_argument("random_hermitian: need n prescribed eigenvalues");
            eigs.assign(prescribed.begin(), prescribed.end());
            break;
        case SpectrumLaw::forced_indefinite:
            if (n < 2)
                throw std::invalid_argument("random_hermitian: indefinite needs n >= 2");
            eigs = indefinite_eigs(n, rng);
            break;
    }
    const CMatrix v = haar_unitary(n, rng);
    return from_spectrum(eigs, v);
}

std::pair<HermitianMatrix, HermitianMatrix> generate_pair(const InstanceSpec& spec) {
    if (spec.dim_min < 2 || spec.dim_max < spec.dim_min)
        throw std::invalid_argument("generate_pair: need 2 <= dim_min <= dim_max");
    if (spec.law != SpectrumLaw::forced_indefinite)
        throw std::invalid_argument(
            "generate_pair: pair targets are built on the forced_indefinite law");

    SplitMix64 rng =
        derive_stream(spec.seed, 0x9a12ULL + static_cast<std::uint64_t>(spec.target));
    const int span = spec.dim_max - spec.dim_min + 1;
    const int n = spec.dim_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    const int k = spec.dim_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));

    std::vector<double> ea = indefinite_eigs(n, rng);
    const double lmax = *std::max_element(ea.begin(), ea.end());
    const double lmin = *std::min_element(ea.begin(), ea.end());
    const double margin = 0.05 * (lmax - lmin);
    const double tr_a = std::accumulate(ea.begin(), ea.end(), 0.0);
    double plus_a = 0.0;
    for (double v : ea) plus_a += std::max(0.0, v);

    std::vector<double> eb(static_cast<std::size_t>(k));

    switch (spec.target) {
        case RelationTarget::satisfy_pu: {
            for (double& v : eb) v = rng.uniform(lmin + margin, lmax - margin);
            break;
        }
        case RelationTarget::violate_pu: {
            for (double& v : eb) v = rng.uniform(lmin + margin, lmax - margin);
            eb[0] = std::max(eb[0], 0.01);  // keep B indefinite
            eb[static_cast<std::size_t>(k - 1)] =
                std::min(eb[static_cast<std::size_t>(k - 1)], -0.01);
            const int mode = static_cast<int>(rng.below(3));
            if (mode != 1) eb[0] = lmax + 0.1 + rng.uniform01();
            if (mode != 0)
                eb[static_cast<std::size_t>(k - 1)] = lmin - 0.1 - rng.uniform01();
            break;
        }
        case RelationTarget::satisfy_ptp: {
            const double lo = std::max(tr_a, 0.0);
            const double width = plus_a - 0.05 - lo;  // >= 0.05 by construction of A
            const double target_plus = lo + (0.02 + 0.98 * rng.uniform01()) * width;
            const double target_minus = target_plus - tr_a;
            const int npos = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1)));
            const int nneg = k - npos;
            const std::vector<double> pos = simplex_split(target_plus, npos, rng);
            const std::vector<double> neg = simplex_split(target_minus, nneg, rng);
            eb.clear();
            eb.insert(eb.end(), pos.begin(), pos.end());
            for (double v : neg) eb.push_back(-v);
            break;
        }
        case RelationTarget::violate_ptp: {
            const int mode = static_cast<int>(rng.below(2));
            if (mode == 0) {
                for (double& v : eb) v = rng.uniform(-1.0, 1.0);
                const double sign = rng.below(2) ? 1.0 : -1.0;
                const double target_tr = tr_a + sign * (0.1 + rng.uniform01());
                const double cur = std::accumulate(eb.begin(), eb.end(), 0.0);
                for (double& v : eb) v += (target_tr - cur) / k;
            } else {
                const double target_plus = plus_a + 0.1 + rng.uniform01();
                const double target_minus = target_plus - tr_a;
                const int npos = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1)));
                const int nneg = k - npos;
                const std::vector<double> pos = simplex_split(target_plus, npos, rng);
                const std::vector<double> neg = simplex_split(target_minus, nneg, rng);
                eb.clear();
                eb.insert(eb.end(), pos.begin(), pos.end());
                for (double v : neg) eb.push_back(-v);
            }
            break;
        }
        case RelationTarget::equal_inf_norms: {
            const double top_p = 0.2 + 0.8 * rng.uniform01();
            const double top_m = 0.2 + 0.8 * rng.uniform01();
            for (double& v : ea) v = rng.uniform(-top_m, top_p);
            ea[0] = top_p;
            ea[1] = -top_m;
            for (double& v : eb) v = rng.uniform(-top_m, top_p);
            eb[0] = top_p;
            eb[1] = -top_m;
            break;
        }
        case RelationTarget::equal_one_norms: {
            const double sum_p = 0.5 + rng.uniform01();
            const double sum_m = 0.5 + rng.uniform01();
            auto build = [&](int m) {
                const int npos = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
                const int nneg = m - npos;
                std::vector<double> e = simplex_split(sum_p, npos, rng);
                for (double v : simplex_split(sum_m, nneg, rng)) e.push_back(-v);
                return e;
            };
            ea = build(n);
            eb = build(k);
            break;
        }
    }

    const CMatrix va = haar_unitary(n, rng);
    const CMatrix vb = haar_unitary(k, rng);
    return {from_spectrum(ea, va), from_spectrum(eb, vb)};
}

bool SuiteReport::passed() const {
    for (const PropertyResult& p : properties)
        if (p.failures > 0) return false;
    return true;
}

namespace {

struct Slot {
    long long checks = 0;
    long long failures = 0;
    double worst = 0.0;
    long long first_bad = -1;
    std::string dump;
};

class Recorder {
public:
    explicit Recorder(std::size_t nprops) : slots_(nprops) {}

    void record(std::size_t prop, long long trial, bool ok, double violation = 1.0,
                const std::function<std::string()>& dump = {}) {
        Slot& s = slots_.at(prop);
        ++s.checks;
        if (ok) return;
        ++s.failures;
        s.worst = std::max(s.worst, violation);
        if (s.first_bad < 0 || trial < s.first_bad) {
            s.first_bad = trial;
            s.dump = dump ? dump() : std::string();
        }
    }

    void merge_from(const Recorder& o) {
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            Slot& s = slots_[i];
            const Slot& t = o.slots_[i];
            s.checks += t.checks;
            s.failures += t.failures;
            s.worst = std::max(s.worst, t.worst);
            if (t.first_bad >= 0 && (s.first_bad < 0 || t.first_bad < s.first_bad)) {
                s.first_bad = t.first_bad;
                s.dump = t.dump;
            }
        }
    }

    const std::vector<Slot>& slots() const { return slots_; }

private:
    std::vector<Slot> slots_;
};

using TrialBody = std::function<void(long long, SplitMix64&, Recorder&)>;

SuiteReport run_trials(const std::string& suite, int trials, std::uint64_t seed, double tol,
                       std::vector<std::string> names, const TrialBody& body) {
    if (trials < 1) throw std::invalid_argument("run_suite: trials must be >= 1");
    names.emplace_back("unexpected-exception");
    const std::size_t exc = names.size() - 1;

    Recorder global(names.size());
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        Recorder local(names.size());
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (long long t = 0; t < trials; ++t) {
            SplitMix64 rng = derive_stream(seed, static_cast<std::uint64_t>(t));
            try {
                body(t, rng, local);
                local.record(exc, t, true, 0.0);
            } catch (const std::exception& e) {
                local.record(exc, t, false, 1.0,
                             [msg = std::string(e.what())] { return msg; });
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        global.merge_from(local);
    }

    SuiteReport rep;
    rep.suite = suite;
    rep.trials = trials;
    rep.seed = seed;
    rep.tol = tol;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const Slot& s = global.slots()[i];
        rep.properties.push_back(PropertyResult{names[i], s.checks, s.failures, s.worst});
        if (s.first_bad >= 0 && !s.dump.empty())
            rep.counterexamples.push_back("property=" + names[i] +
                                          " trial=" + std::to_string(s.first_bad) + "\n" + s.dump);
    }
    return rep;
}

std::string dump_pair(const HermitianMatrix& a, const HermitianMatrix& b) {
    return "A: " + matrix_to_json(a) + "\nB: " + matrix_to_json(b);
}

double plus_norm_1_of(std::span<const double> eigs) {
    double s = 0.0;
    for (double l : eigs) s += std::max(0.0, l);
    return s;
}

double minus_norm_1_of(std::span<const double> eigs) {
    double s = 0.0;
    for (double l : eigs) s += std::max(0.0, -l);
    return s;
}

// ---- core -----------------------------------------------------------------

SuiteReport suite_core(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {
        "eig-reconstruction",  "eig-orthonormality", "eig-determinism",
        "jordan-psd-parts",    "jordan-orthogonal-supports",
        "jordan-reconstruction", "jordan-trace-identity", "norm-additivity",
        "majorizes-reflexive", "majorizes-mixing-transitive", "definiteness-classes"};
    auto body = [](long long t, SplitMix64& rng, Recorder& rec) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const HermitianMatrix a = random_hermitian(n, SpectrumLaw::uniform, rng.next_u64());
        auto dump_a = [&a] { return "A: " + matrix_to_json(a); };

        const Spectrum sp = eig_hermitian(a);
        const double norm_inf = std::max(std::abs(sp.eigenvalues.front()),
                                         std::abs(sp.eigenvalues.back()));
        const double scale = std::max(1.0, norm_inf);

        CMatrix lam(n, n);
        for (int i = 0; i < n; ++i) lam(i, i) = sp.eigenvalues[static_cast<std::size_t>(i)];
        const double recon =
            max_abs_diff(sp.eigenvectors * lam * adjoint(sp.eigenvectors), a.mat());
        rec.record(0, t, recon * n <= 1e-9 * scale, recon, dump_a);

        const double ortho =
            max_abs_diff(adjoint(sp.eigenvectors) * sp.eigenvectors, CMatrix::identity(n));
        rec.record(1, t, ortho * n <= 1e-10, ortho, dump_a);

        const Spectrum sp2 = eig_hermitian(a);
        rec.record(2, t,
                   sp2.eigenvalues == sp.eigenvalues &&
                       max_abs_diff(sp2.eigenvectors, sp.eigenvectors) == 0.0,
                   1.0, dump_a);

        const JordanDecomposition jd = jordan_decompose(a);
        const std::vector<double> ep = hermitian_eigenvalues(jd.plus);
        const std::vector<double> em = hermitian_eigenvalues(jd.minus);
        rec.record(3, t, ep.back() >= -1e-10 && em.back() >= -1e-10,
                   std::max(-ep.back(), -em.back()), dump_a);
        const double cross = max_abs(jd.plus.mat() * jd.minus.mat());
        rec.record(4, t, cross * n <= 1e-9 * std::max(1.0, norm_inf * norm_inf), cross, dump_a);
        const double resid = max_abs_diff((jd.plus - jd.minus).mat(), a.mat());
        rec.record(5, t, resid * n <= 1e-9 * scale, resid, dump_a);

        const double p1 = schatten_norm(jd.plus, PNorm::one);
        const double m1 = schatten_norm(jd.minus, PNorm::one);
        rec.record(6, t, std::abs(p1 - m1 - trace(a)) <= 1e-9, std::abs(p1 - m1 - trace(a)),
                   dump_a);
        const double a1 = schatten_norm(a, PNorm::one);
        const double pinf = schatten_norm(jd.plus, PNorm::inf);
        const double minf = schatten_norm(jd.minus, PNorm::inf);
        rec.record(7, t,
                   std::abs(a1 - (p1 + m1)) <= 1e-9 &&
                       std::abs(norm_inf - std::max(pinf, minf)) <= 1e-9,
                   std::abs(a1 - (p1 + m1)), dump_a);

        std::vector<double> x(static_cast<std::size_t>(n));
        for (double& v : x) v = rng.uniform(-1.0, 1.0);
        rec.record(8, t, majorizes(x, x));

        auto mixed = [&](const std::vector<double>& v) {
            std::vector<double> perm = v;
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[rng.below(i)]);
            const double alpha = rng.uniform01();
            std::vector<double> r(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                r[i] = alpha * v[i] + (1.0 - alpha) * perm[i];
            return r;
        };
        const std::vector<double> y = mixed(x);
        const std::vector<double> z = mixed(y);
        rec.record(9, t, majorizes(x, y) && majorizes(y, z) && majorizes(x, z));

        const int m = 2 + static_cast<int>(rng.below(5));
        std::vector<double> pos(static_cast<std::size_t>(m));
        for (double& v : pos) v = rng.uniform(0.2, 1.0);
        const HermitianMatrix psd =
            random_hermitian(m, SpectrumLaw::prescribed, rng.next_u64(), pos);
        std::vector<double> negs = pos;
        for (double& v : negs) v = -v;
        const HermitianMatrix nsd =
            random_hermitian(m, SpectrumLaw::prescribed, rng.next_u64(), negs);
        const HermitianMatrix indef =
            random_hermitian(m, SpectrumLaw::forced_indefinite, rng.next_u64());
        rec.record(10, t,
                   definiteness_class(psd, 1e-8) == DefinitenessClass::PSD &&
                       definiteness_class(nsd, 1e-8) == DefinitenessClass::NSD &&
                       definiteness_class(indef, 1e-8) == DefinitenessClass::INDEFINITE &&
                       definiteness_class(HermitianMatrix::zero(m), 1e-8) ==
                           DefinitenessClass::ZERO);
    };
    return run_trials("core", trials, seed, tol, std::move(names), body);
}

// ---- measures-closed-form ---------------------------------------------------

SuiteReport suite_measures(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {
        "mu-inf-minus-spectral", "mu-1-minus-spectral", "mu-vs-jordan-parts",
        "vanishing-on-psd",      "vanishing-on-nsd",    "negation-symmetry",
        "distance-equality",     "distance-achieved",   "robustness-achievable",
        "robustness-falsification"};
    auto body = [tol](long long t, SplitMix64& rng, Recorder& rec) {
        (void)tol;
        const int n = 1 + static_cast<int>(rng.below(6));
        const HermitianMatrix a = random_hermitian(n, SpectrumLaw::uniform, rng.next_u64());
        auto dump_a = [&a] { return "A: " + matrix_to_json(a); };

        const std::vector<double> eigs = hermitian_eigenvalues(a);
        const double mi = mu_inf_minus(a);
        const double m1 = mu_1_minus(a);
        rec.record(0, t, std::abs(mi - std::max(0.0, -eigs.back())) <= 1e-10, 1.0, dump_a);
        rec.record(1, t, std::abs(m1 - minus_norm_1_of(eigs)) <= 1e-10, 1.0, dump_a);

        const JordanDecomposition jd = jordan_decompose(a);
        rec.record(2, t,
                   std::abs(mi - schatten_norm(jd.minus, PNorm::inf)) <= 1e-9 &&
                       std::abs(m1 - schatten_norm(jd.minus, PNorm::one)) <= 1e-9,
                   1.0, dump_a);

        std::vector<double> pos(static_cast<std::size_t>(n));
        for (double& v : pos) v = rng.uniform(0.0, 1.0);
        const HermitianMatrix psd =
            random_hermitian(n, SpectrumLaw::prescribed, rng.next_u64(), pos);
        rec.record(3, t, mu_inf_minus(psd) <= 1e-12 && mu_1_minus(psd) <= 1e-12);
        rec.record(4, t, mu_inf_plus(-1.0 * psd) <= 1e-12 && mu_1_plus(-1.0 * psd) <= 1e-12);

        rec.record(5, t,
                   mu_inf_plus(a) == mu_inf_minus(-a) && mu_1_plus(a) == mu_1_minus(-a), 1.0,
                   dump_a);
        rec.record(6, t,
                   distance_to_psd_cone(a, PNorm::one) == m1 &&
                       distance_to_psd_cone(a, PNorm::inf) == mi,
                   1.0, dump_a);

        bool achieved = true;
        for (PNorm p : {PNorm::one, PNorm::inf}) {
            const HermitianMatrix x = psd_cone_projection(a, p);
            const double val = distance_to_psd_cone(a, p);
            achieved = achieved && hermitian_eigenvalues(x).back() >= -1e-9 &&
                       std::abs(schatten_norm(a - x, p) - val) <= 1e-9;
        }
        rec.record(7, t, achieved, 1.0, dump_a);

        for (PNorm p : {PNorm::one, PNorm::inf}) {
            const double mu = (p == PNorm::one) ? m1 : mi;
            if (mu > 1e-12) {
                const HermitianMatrix xstar = (1.0 / schatten_norm(jd.minus, p)) * jd.minus;
                rec.record(8, t, robustness_lower_bound_certificate(a, p, xstar, mu), 1.0,
                           dump_a);
            }
            if (mu > 1e-8) {
                for (int i = 0; i < 200; ++i) {
                    const HermitianMatrix g =
                        random_hermitian(n, SpectrumLaw::uniform, rng.next_u64());
                    const HermitianMatrix x = (1.0 / schatten_norm(g, p)) * g;
                    const double q = (i == 0) ? (mu - 1e-8) : rng.uniform01() * (mu - 1e-8);
                    rec.record(9, t, !robustness_lower_bound_certificate(a, p, x, q), 1.0,
                               dump_a);
                }
            }
        }
    };
    return run_trials("measures-closed-form", trials, seed, tol, std::move(names), body);
}

// ---- superop-algebra --------------------------------------------------------

SuiteReport suite_superop(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {
        "basis-orthonormality",    "coords-roundtrip",          "from-action-roundtrip",
        "compose-associativity",   "compose-apply-consistency", "serial-parallel-equal",
        "falsification-detects"};
    auto body = [tol](long long t, SplitMix64& rng, Recorder& rec) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const int k = 1 + static_cast<int>(rng.below(4));

        const HermitianBasis basis = hermitian_basis(n);
        bool ortho = true;
        for (std::size_t x = 0; x < basis.elements.size() && ortho; ++x)
            for (std::size_t y = 0; y < basis.elements.size(); ++y) {
                cplx tr = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        tr += basis.elements[x](i, j) * basis.elements[y](j, i);
                const double want = (x == y) ? 1.0 : 0.0;
                if (std::abs(tr - want) > 1e-12) {
                    ortho = false;
                    break;
                }
            }
        rec.record(0, t, ortho);

        const HermitianMatrix a = random_hermitian(n, SpectrumLaw::uniform, rng.next_u64());
        const std::vector<double> coords = basis_coords(a);
        bool coords_ok =
            max_abs_diff(matrix_from_coords(n, coords).mat(), a.mat()) <= 1e-12;
        for (std::size_t idx = 0; idx < coords.size() && coords_ok; ++idx) {
            cplx tr = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) tr += basis.elements[idx](i, j) * a(j, i);
            coords_ok = std::abs(tr.real() - coords[idx]) <= 1e-12;
        }
        rec.record(1, t, coords_ok);

        auto random_superop = [&rng](int from, int to) {
            SuperOperator s;
            s.src_dim = from;
            s.dst_dim = to;
            s.matrix = RMatrix(to * to, from * from);
            for (double& v : s.matrix.data()) v = rng.uniform(-1.0, 1.0);
            return s;
        };
        const SuperOperator m = random_superop(n, k);
        const SuperOperator m2 = superop_from_action(
            n, k, [&m](const HermitianMatrix& x) { return apply(m, x); });
        double rebuild = 0.0;
        for (std::size_t i = 0; i < m.matrix.data().size(); ++i)
            rebuild = std::max(rebuild, std::abs(m.matrix.data()[i] - m2.matrix.data()[i]));
        rec.record(2, t, rebuild <= 1e-10, rebuild);

        const int mdim = 1 + static_cast<int>(rng.below(4));
        const int ldim = 1 + static_cast<int>(rng.below(4));
        const SuperOperator s1 = random_superop(n, k);
        const SuperOperator s2 = random_superop(k, mdim);
        const SuperOperator s3 = random_superop(mdim, ldim);
        const SuperOperator left = compose(compose(s3, s2), s1);
        const SuperOperator right = compose(s3, compose(s2, s1));
        double assoc = 0.0;
        for (std::size_t i = 0; i < left.matrix.data().size(); ++i)
            assoc = std::max(assoc,
                             std::abs(left.matrix.data()[i] - right.matrix.data()[i]));
        rec.record(3, t, assoc <= 1e-10, assoc);

        const double chain = max_abs_diff(apply(compose(s2, s1), a).mat(),
                                          apply(s2, apply(s1, a)).mat());
        rec.record(4, t, chain <= 1e-10, chain);

        const std::uint64_t fs = rng.next_u64();
        const VerificationReport rp = positivity_falsification(m, 64, fs, tol);
        const VerificationReport rs = positivity_falsification_serial(m, 64, fs, tol);
        bool equal = rp.positivity_min == rs.positivity_min &&
                     rp.counterexample_trial == rs.counterexample_trial &&
                     rp.residual_unital == rs.residual_unital &&
                     rp.residual_trace == rs.residual_trace &&
                     rp.counterexample.has_value() == rs.counterexample.has_value();
        if (equal && rp.counterexample.has_value())
            equal = *rp.counterexample == *rs.counterexample;
        rec.record(5, t, equal);

        const SuperOperator bad = superop_from_action(2, 2, [](const HermitianMatrix& x) {
            CMatrix out(2, 2);
            out(0, 0) = x(0, 0).real();
            out(1, 1) = -x(0, 0).real();
            return HermitianMatrix::symmetrized(out);
        });
        const VerificationReport rb = positivity_falsification(bad, 100, rng.next_u64(), tol);
        const VerificationReport rid =
            positivity_falsification(identity_superop(n), 100, rng.next_u64(), tol);
        rec.record(6, t,
                   rb.counterexample.has_value() && rb.positivity_min < -tol &&
                       !rid.counterexample.has_value() && rid.positivity_min >= -1e-12);
    };
    return run_trials("superop-algebra", trials, seed, tol, std::move(names), body);
}

// ---- roundtrip suites -------------------------------------------------------

struct SpectralSummary {
    double lmax, lmin, plus1, minus1, tr;
};

SpectralSummary summarize(const HermitianMatrix& x) {
    const std::vector<double> e = hermitian_eigenvalues(x);
    return SpectralSummary{e.front(), e.back(), plus_norm_1_of(e), minus_norm_1_of(e),
                           std::accumulate(e.begin(), e.end(), 0.0)};
}

SuiteReport suite_pu_roundtrip(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {"feasible",          "apply-residual",
                                      "unitality",         "positivity",
                                      "mu-inf-monotone",   "opnorm-contraction",
                                      "composition-closure", "eigenbasis-invariance"};
    auto body = [tol](long long t, SplitMix64& rng, Recorder& rec) {
        InstanceSpec spec;
        spec.target = RelationTarget::satisfy_pu;
        spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(spec);
        auto dump = [&] { return dump_pair(a, b); };

        const FeasibilityVerdict v = feasible_pu(a, b);
        rec.record(0, t, v.feasible, 1.0, dump);

        const SynthResult s = synth_pu(a, b);
        const double ar = schatten_norm(apply(s.op, a) - b, PNorm::inf);
        rec.record(1, t, ar <= 1e-7, ar, dump);

        const VerificationReport rep = positivity_falsification(s.op, 1000, rng.next_u64(), tol);
        rec.record(2, t, rep.residual_unital <= 1e-8, rep.residual_unital, dump);
        rec.record(3, t, rep.positivity_min >= -1e-8, -rep.positivity_min, dump);

        for (int i = 0; i < 25; ++i) {
            const HermitianMatrix x =
                random_hermitian(a.dim(), SpectrumLaw::uniform, rng.next_u64());
            const SpectralSummary sx = summarize(x);
            const SpectralSummary sy = summarize(apply(s.op, x));
            const double mu_m_in = std::max(0.0, -sx.lmin);
            const double mu_m_out = std::max(0.0, -sy.lmin);
            const double mu_p_in = std::max(0.0, sx.lmax);
            const double mu_p_out = std::max(0.0, sy.lmax);
            rec.record(4, t, mu_m_out <= mu_m_in + 1e-8 && mu_p_out <= mu_p_in + 1e-8,
                       std::max(mu_m_out - mu_m_in, mu_p_out - mu_p_in), dump);
            const double nx = std::max(std::abs(sx.lmax), std::abs(sx.lmin));
            const double ny = std::max(std::abs(sy.lmax), std::abs(sy.lmin));
            rec.record(5, t, ny <= nx + 1e-8, ny - nx, dump);
        }

        if (t % 8 == 0) {
            InstanceSpec spec2;
            spec2.dim_min = spec2.dim_max = b.dim();
            spec2.target = RelationTarget::satisfy_pu;
            spec2.seed = rng.next_u64();
            const auto [a2, b2] = generate_pair(spec2);
            const SynthResult s2 = synth_pu(a2, b2);
            const SuperOperator chained = compose(s2.op, s.op);
            const VerificationReport rc =
                positivity_falsification(chained, 500, rng.next_u64(), tol);
            rec.record(6, t, rc.residual_unital <= 1e-7 && rc.positivity_min >= -1e-8,
                       std::max(rc.residual_unital, -rc.positivity_min), dump);
        }

        if (t % 8 == 4) {
            const int n = 3 + static_cast<int>(rng.below(3));
            std::vector<double> vals(static_cast<std::size_t>(n));
            for (double& x : vals) x = rng.uniform(-1.0, 1.0);
            vals[0] = vals[1] = 0.3 + 0.5 * rng.uniform01();  // degenerate top pair
            vals[static_cast<std::size_t>(n - 1)] = -(0.1 + 0.9 * rng.uniform01());
            CMatrix v1 = haar_unitary(n, rng);
            const HermitianMatrix adeg = from_spectrum(vals, v1);
            // rotate within the degenerate eigenspace; same matrix, new basis
            const CMatrix g = haar_unitary(2, rng);
            CMatrix v2 = v1;
            for (int r = 0; r < n; ++r) {
                v2(r, 0) = g(0, 0) * v1(r, 0) + g(1, 0) * v1(r, 1);
                v2(r, 1) = g(0, 1) * v1(r, 0) + g(1, 1) * v1(r, 1);
            }
            const HermitianMatrix adeg2 = from_spectrum(vals, v2);
            const double hi = *std::max_element(vals.begin(), vals.end());
            const double lo = *std::min_element(vals.begin(), vals.end());
            const int kk = 2 + static_cast<int>(rng.below(5));
            std::vector<double> eb(static_cast<std::size_t>(kk));
            const double mg = 0.05 * (hi - lo);
            for (double& x : eb) x = rng.uniform(lo + mg, hi - mg);
            const HermitianMatrix bdeg = from_spectrum(eb, haar_unitary(kk, rng));
            const SynthResult r1 = synth_pu(adeg, bdeg);
            const SynthResult r2 = synth_pu(adeg2, bdeg);
            const double e1 = schatten_norm(apply(r1.op, adeg) - bdeg, PNorm::inf);
            const double e2 = schatten_norm(apply(r2.op, adeg2) - bdeg, PNorm::inf);
            rec.record(7, t,
                       e1 <= 1e-7 && e2 <= 1e-7 && check_unital(r1.op) <= 1e-8 &&
                           check_unital(r2.op) <= 1e-8,
                       std::max(e1, e2));
        }
    };
    return run_trials("pu-roundtrip", trials, seed, tol, std::move(names), body);
}

SuiteReport suite_ptp_roundtrip(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {"feasible",        "apply-residual",
                                      "trace-preservation", "positivity",
                                      "mu-1-monotone",   "trace-norm-contraction",
                                      "composition-closure", "cert-structure"};
    auto body = [tol](long long t, SplitMix64& rng, Recorder& rec) {
        InstanceSpec spec;
        spec.target = RelationTarget::satisfy_ptp;
        spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(spec);
        auto dump = [&] { return dump_pair(a, b); };

        const FeasibilityVerdict v = feasible_ptp(a, b);
        rec.record(0, t, v.feasible, 1.0, dump);

        const SynthResult s = synth_ptp(a, b);
        const double ar = schatten_norm(apply(s.op, a) - b, PNorm::inf);
        rec.record(1, t, ar <= 1e-7, ar, dump);

        const VerificationReport rep = positivity_falsification(s.op, 1000, rng.next_u64(), tol);
        rec.record(2, t, rep.residual_trace <= 1e-8, rep.residual_trace, dump);
        rec.record(3, t, rep.positivity_min >= -1e-8, -rep.positivity_min, dump);

        for (int i = 0; i < 25; ++i) {
            const HermitianMatrix x =
                random_hermitian(a.dim(), SpectrumLaw::uniform, rng.next_u64());
            const SpectralSummary sx = summarize(x);
            const SpectralSummary sy = summarize(apply(s.op, x));
            rec.record(4, t,
                       sy.minus1 <= sx.minus1 + 1e-8 && sy.plus1 <= sx.plus1 + 1e-8,
                       std::max(sy.minus1 - sx.minus1, sy.plus1 - sx.plus1), dump);
            rec.record(5, t,
                       sy.plus1 + sy.minus1 <= sx.plus1 + sx.minus1 + 1e-8 &&
                           std::abs(sy.tr - sx.tr) <= 1e-8,
                       std::abs(sy.tr - sx.tr), dump);
        }

        if (t % 8 == 0) {
            InstanceSpec spec2;
            spec2.dim_min = spec2.dim_max = b.dim();
            spec2.target = RelationTarget::satisfy_ptp;
            spec2.seed = rng.next_u64();
            const auto [a2, b2] = generate_pair(spec2);
            const SynthResult s2 = synth_ptp(a2, b2);
            const SuperOperator chained = compose(s2.op, s.op);
            const VerificationReport rc =
                positivity_falsification(chained, 500, rng.next_u64(), tol);
            rec.record(6, t, rc.residual_trace <= 1e-7 && rc.positivity_min >= -1e-8,
                       std::max(rc.residual_trace, -rc.positivity_min), dump);
        }

        bool cert_ok = s.cert.kind == ConstructionKind::ptp_composed_equal_norms &&
                       static_cast<int>(s.cert.steps.size()) <= a.dim();
        for (const ConstructionCert& st : s.cert.steps) {
            cert_ok = cert_ok && st.kind == ConstructionKind::ptp_shrink_step &&
                      st.shrink_params.has_value() && st.shrink_params->p >= 0.0 &&
                      st.shrink_params->p < 1.0 && st.shrink_params->q > 0.0 &&
                      st.shrink_params->x > 0.0;
        }
        rec.record(7, t, cert_ok, 1.0, dump);
    };
    return run_trials("ptp-roundtrip", trials, seed, tol, std::move(names), body);
}

// ---- necessity suites -------------------------------------------------------

SuiteReport suite_pu_necessity(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {"rejected", "witness-inf-norms", "synth-throws"};
    auto body = [](long long t, SplitMix64& rng, Recorder& rec) {
        InstanceSpec spec;
        spec.target = RelationTarget::violate_pu;
        spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(spec);
        auto dump = [&] { return dump_pair(a, b); };

        rec.record(0, t, !feasible_pu(a, b).feasible, 1.0, dump);

        const JordanDecomposition ja = jordan_decompose(a);
        const JordanDecomposition jb = jordan_decompose(b);
        const double ap = schatten_norm(ja.plus, PNorm::inf);
        const double am = schatten_norm(ja.minus, PNorm::inf);
        const double bp = schatten_norm(jb.plus, PNorm::inf);
        const double bm = schatten_norm(jb.minus, PNorm::inf);
        rec.record(1, t, bp > ap + 1e-9 || bm > am + 1e-9, 1.0, dump);

        bool threw = false;
        try {
            synth_pu(a, b);
        } catch (const infeasible_error&) {
            threw = true;
        }
        rec.record(2, t, threw, 1.0, dump);
    };
    return run_trials("pu-necessity", trials, seed, tol, std::move(names), body);
}

SuiteReport suite_ptp_necessity(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {"rejected", "witness-1-norms", "synth-throws"};
    auto body = [](long long t, SplitMix64& rng, Recorder& rec) {
        InstanceSpec spec;
        spec.target = RelationTarget::violate_ptp;
        spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(spec);
        auto dump = [&] { return dump_pair(a, b); };

        rec.record(0, t, !feasible_ptp(a, b).feasible, 1.0, dump);
        rec.record(1, t,
                   std::abs(trace(a) - trace(b)) > 1e-9 || mu_1_plus(b) > mu_1_plus(a) + 1e-9,
                   1.0, dump);

        bool threw = false;
        try {
            synth_ptp(a, b);
        } catch (const infeasible_error&) {
            threw = true;
        }
        rec.record(2, t, threw, 1.0, dump);
    };
    return run_trials("ptp-necessity", trials, seed, tol, std::move(names), body);
}

// ---- equal-norms ------------------------------------------------------------

SuiteReport suite_equal_norms(int trials, std::uint64_t seed, double tol) {
    std::vector<std::string> names = {"pu-equal-norms-verifies", "pu-general-agrees",
                                      "coefficients-nonnegative", "ptp-equal-norms-verifies",
                                      "ptp-delegation"};
    auto body = [tol](long long t, SplitMix64& rng, Recorder& rec) {
        InstanceSpec spec;
        spec.target = RelationTarget::equal_inf_norms;
        spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(spec);
        auto dump = [&] { return dump_pair(a, b); };

        const SynthResult r1 = synth_pu_equal_norms(a, b);
        const VerificationReport v1 = positivity_falsification(r1.op, 500, rng.next_u64(), tol);
        const double e1 = schatten_norm(apply(r1.op, a) - b, PNorm::inf);
        rec.record(0, t,
                   e1 <= 1e-8 && v1.residual_unital <= 1e-8 && v1.positivity_min >= -1e-8, e1,
                   dump);

        const SynthResult r2 = synth_pu(a, b);
        const VerificationReport v2 = positivity_falsification(r2.op, 500, rng.next_u64(), tol);
        const double e2 = schatten_norm(apply(r2.op, a) - b, PNorm::inf);
        rec.record(1, t,
                   e2 <= 1e-7 && v2.residual_unital <= 1e-8 && v2.positivity_min >= -1e-8, e2,
                   dump);

        bool coeffs = r1.cert.weights.has_value() && r2.cert.weights.has_value();
        if (coeffs) {
            for (double w : r1.cert.weights->data()) coeffs = coeffs && w >= -1e-12;
            for (double w : r2.cert.weights->data()) coeffs = coeffs && w >= -1e-12;
            for (int j = 0; j < r2.cert.weights->cols() && coeffs; ++j) {
                double col = 0.0;
                for (int i = 0; i < r2.cert.weights->rows(); ++i) col += (*r2.cert.weights)(i, j);
                coeffs = std::abs(col - 1.0) <= 1e-10;
            }
        }
        rec.record(2, t, coeffs, 1.0, dump);

        InstanceSpec spec2;
        spec2.target = RelationTarget::equal_one_norms;
        spec2.seed = rng.next_u64();
        const auto [c, d] = generate_pair(spec2);
        auto dump2 = [&] { return dump_pair(c, d); };

        const SynthResult r3 = synth_ptp_equal_norms(c, d);
        const VerificationReport v3 = positivity_falsification(r3.op, 500, rng.next_u64(), tol);
        const double e3 = schatten_norm(apply(r3.op, c) - d, PNorm::inf);
        rec.record(3, t,
                   e3 <= 1e-8 && v3.residual_trace <= 1e-8 && v3.positivity_min >= -1e-8, e3,
                   dump2);

        const SynthResult r4 = synth_ptp(c, d);
        rec.record(4, t,
                   r4.cert.kind == ConstructionKind::ptp_composed_equal_norms &&
                       r4.cert.steps.empty() &&
                       schatten_norm(apply(r4.op, c) - d, PNorm::inf) <= 1e-8,
                   1.0, dump2);
    };
    return run_trials("equal-norms", trials, seed, tol, std::move(names), body);
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"core",         "measures-closed-form", "superop-algebra", "pu-roundtrip",
            "ptp-roundtrip", "pu-necessity",        "ptp-necessity",   "equal-norms"};
}

SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed, double tol) {
    if (name == "core") return suite_core(trials, seed, tol);
    if (name == "measures-closed-form") return suite_measures(trials, seed, tol);
    if (name == "superop-algebra") return suite_superop(trials, seed, tol);
    if (name == "pu-roundtrip") return suite_pu_roundtrip(trials, seed, tol);
    if (name == "ptp-roundtrip") return suite_ptp_roundtrip(trials, seed, tol);
    if (name == "pu-necessity") return suite_pu_necessity(trials, seed, tol);
    if (name == "ptp-necessity") return suite_ptp_necessity(trials, seed, tol);
    if (name == "equal-norms") return suite_equal_norms(trials, seed, tol);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace posmap
