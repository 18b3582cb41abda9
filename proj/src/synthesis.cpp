#include "posmap/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace posmap {

namespace {

constexpr double kMarginTol = 1e-9;

double plus_norm_1(std::span<const double> eigs) {
    double s = 0.0;
    for (double l : eigs) s += std::max(0.0, l);
    return s;
}

double minus_norm_1(std::span<const double> eigs) {
    double s = 0.0;
    for (double l : eigs) s += std::max(0.0, -l);
    return s;
}

std::vector<cplx> column(const CMatrix& m, int col) {
    std::vector<cplx> v(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) v[static_cast<std::size_t>(i)] = m(i, col);
    return v;
}

double clamp01(double v) {
    if (!(v > 0.0)) return 0.0;
    return v < 1.0 ? v : 1.0;
}

// Phi(X) = sum_j (sum_i w(i,j) <v_i, X v_i>) q_j q_j*; positive for
// entrywise-nonnegative weights, kernel on the complement of span{v_i v_i*}.
SuperOperator map_from_projector_weights(const std::vector<std::vector<cplx>>& avecs,
                                         const std::vector<std::vector<cplx>>& bvecs,
                                         const RMatrix& w, int n, int k) {
    auto action = [&](const HermitianMatrix& x) {
        std::vector<double> amp(avecs.size(), 0.0);
        for (std::size_t i = 0; i < avecs.size(); ++i) {
            cplx e = 0.0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    e += std::conj(avecs[i][static_cast<std::size_t>(r)]) * x(r, c) *
                         avecs[i][static_cast<std::size_t>(c)];
            amp[i] = e.real();
        }
        CMatrix out(k, k);
        for (std::size_t j = 0; j < bvecs.size(); ++j) {
            double cj = 0.0;
            for (std::size_t i = 0; i < avecs.size(); ++i)
                cj += w(static_cast<int>(i), static_cast<int>(j)) * amp[i];
            if (cj == 0.0) continue;
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    out(r, c) += cj * bvecs[j][static_cast<std::size_t>(r)] *
                                 std::conj(bvecs[j][static_cast<std::size_t>(c)]);
        }
        return HermitianMatrix::symmetrized(out);
    };
    return superop_from_action(n, k, action);
}

struct SignGroups {
    std::vector<double> pos;                  // eigenvalues >= -ztol, clamped at 0, non-increasing
    std::vector<std::vector<cplx>> pos_vecs;
    std::vector<double> neg;                  // magnitudes of eigenvalues < -ztol, non-increasing
    std::vector<std::vector<cplx>> neg_vecs;
};

SignGroups split_groups(const Spectrum& sp) {
    const double ztol = jordan_zero_tolerance(sp.eigenvalues);
    const int n = static_cast<int>(sp.eigenvalues.size());
    SignGroups g;
    int split = n;
    for (int i = 0; i < n; ++i) {
        if (sp.eigenvalues[static_cast<std::size_t>(i)] < -ztol) {
            split = i;
            break;
        }
    }
    for (int i = 0; i < split; ++i) {
        g.pos.push_back(std::max(0.0, sp.eigenvalues[static_cast<std::size_t>(i)]));
        g.pos_vecs.push_back(column(sp.eigenvectors, i));
    }
    for (int i = n - 1; i >= split; --i) {  // reversed tail: magnitudes non-increasing
        g.neg.push_back(-sp.eigenvalues[static_cast<std::size_t>(i)]);
        g.neg_vecs.push_back(column(sp.eigenvectors, i));
    }
    return g;
}

void assert_postcondition(bool ok, const char* what) {
    if (!ok) throw std::runtime_error(what);
}

}  // namespace

const char* to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::pu_convex_hull: return "PU_CONVEX_HULL";
        case ConstructionKind::pu_equal_norms: return "PU_EQUAL_NORMS";
        case ConstructionKind::pu_2x2_shrink: return "PU_2X2_SHRINK";
        case ConstructionKind::ptp_composed_equal_norms: return "PTP_COMPOSED_EQUAL_NORMS";
        case ConstructionKind::ptp_shrink_step: return "PTP_SHRINK_STEP";
        case ConstructionKind::scaling_ray: return "SCALING_RAY";
    }
    return "?";
}

FeasibilityVerdict feasible_pu(const HermitianMatrix& a, const HermitianMatrix& b) {
    const std::vector<double> ea = hermitian_eigenvalues(a);
    const std::vector<double> eb = hermitian_eigenvalues(b);
    FeasibilityVerdict v;
    const double m_max = ea.front() - eb.front();
    const double m_min = eb.back() - ea.back();
    v.margins = {{"lambda_max", m_max}, {"lambda_min", m_min}};
    v.feasible = (m_max >= -kMarginTol) && (m_min >= -kMarginTol);
    if (m_max < -kMarginTol)
        v.failing_condition = "lambda_max";
    else if (m_min < -kMarginTol)
        v.failing_condition = "lambda_min";
    return v;
}

FeasibilityVerdict feasible_ptp(const HermitianMatrix& a, const HermitianMatrix& b) {
    const std::vector<double> ea = hermitian_eigenvalues(a);
    const std::vector<double> eb = hermitian_eigenvalues(b);
    FeasibilityVerdict v;
    const double m_trace = trace(a) - trace(b);
    const double m_plus = plus_norm_1(ea) - plus_norm_1(eb);
    const double m_minus = minus_norm_1(ea) - minus_norm_1(eb);
    v.margins = {{"trace", m_trace}, {"plus_norm_1", m_plus}, {"minus_norm_1", m_minus}};
    v.feasible = (std::abs(m_trace) <= kMarginTol) && (m_plus >= -kMarginTol);
    if (std::abs(m_trace) > kMarginTol)
        v.failing_condition = "trace";
    else if (m_plus < -kMarginTol)
        v.failing_condition = "plus_norm_1";
    return v;
}

SynthResult synth_pu(const HermitianMatrix& a, const HermitianMatrix& b) {
    const FeasibilityVerdict verdict = feasible_pu(a, b);
    if (!verdict.feasible)
        throw infeasible_error("synth_pu: no PU map exists for this pair (failing " +
                               verdict.failing_condition.value_or("?") + ")");

    const Spectrum sa = eig_hermitian(a);
    const Spectrum sb = eig_hermitian(b);
    const int n = a.dim();
    const int k = b.dim();
    const double lmax = sa.eigenvalues.front();
    const double lmin = sa.eigenvalues.back();
    const double spread = lmax - lmin;

    RMatrix w(n, k);
    if (spread <= 1e-9 * std::max(1.0, std::max(std::abs(lmax), std::abs(lmin)))) {
        // A is (numerically) a multiple of the identity; feasibility already
        // forces B to be the same multiple, and Phi(X) = (tr X / n) I_k.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) w(i, j) = 1.0 / n;
    } else {
        const int imax = 0;
        int imin = n - 1;
        for (int i = 0; i < n; ++i) {
            if (sa.eigenvalues[static_cast<std::size_t>(i)] ==
                sa.eigenvalues[static_cast<std::size_t>(n - 1)]) {
                imin = i;
                break;
            }
        }
        for (int j = 0; j < k; ++j) {
            const double t = clamp01((sb.eigenvalues[static_cast<std::size_t>(j)] - lmin) / spread);
            w(imax, j) += t;
            w(imin, j) += 1.0 - t;
        }
    }

    std::vector<std::vector<cplx>> avecs;
    std::vector<std::vector<cplx>> bvecs;
    for (int i = 0; i < n; ++i) avecs.push_back(column(sa.eigenvectors, i));
    for (int j = 0; j < k; ++j) bvecs.push_back(column(sb.eigenvectors, j));

    SynthResult res;
    res.op = map_from_projector_weights(avecs, bvecs, w, n, k);
    res.cert.kind = ConstructionKind::pu_convex_hull;
    res.cert.weights = std::move(w);

    assert_postcondition(check_unital(res.op) <= 1e-8, "synth_pu: unitality postcondition failed");
    assert_postcondition(schatten_norm(apply(res.op, a) - b, PNorm::inf) <= 1e-8,
                         "synth_pu: mapping postcondition failed");
    return res;
}

SynthResult synth_pu_equal_norms(const HermitianMatrix& a, const HermitianMatrix& b) {
    const Spectrum sa = eig_hermitian(a);
    const Spectrum sb = eig_hermitian(b);
    const double ztol_a = jordan_zero_tolerance(sa.eigenvalues);
    const double ztol_b = jordan_zero_tolerance(sb.eigenvalues);
    if (!(sa.eigenvalues.front() > ztol_a && sa.eigenvalues.back() < -ztol_a))
        throw std::invalid_argument("synth_pu_equal_norms: A must be indefinite");
    if (!(sb.eigenvalues.front() > ztol_b && sb.eigenvalues.back() < -ztol_b))
        throw std::invalid_argument("synth_pu_equal_norms: B must be indefinite");

    const double top_p = sa.eigenvalues.front();   // ||A_+||_inf = ||B_+||_inf
    const double top_m = -sa.eigenvalues.back();   // ||A_-||_inf = ||B_-||_inf
    if (std::abs(top_p - sb.eigenvalues.front()) > kMarginTol ||
        std::abs(top_m + sb.eigenvalues.back()) > kMarginTol)
        throw std::invalid_argument(
            "synth_pu_equal_norms: part operator norms differ by more than 1e-9");

    const SignGroups ga = split_groups(sa);
    const SignGroups gb = split_groups(sb);
    const int np = static_cast<int>(ga.pos.size());
    const int nm = static_cast<int>(ga.neg.size());
    const int kp = static_cast<int>(gb.pos.size());
    const int km = static_cast<int>(gb.neg.size());
    const int n = np + nm;
    const int k = kp + km;

    // Row order: A's positive ranks then negative ranks; columns likewise
    // for B. Rank 1 of each group is handled explicitly, the rest by the
    // four index-set cases.
    RMatrix w(n, k);
    IndexSets sets;
    const int row_p1 = 0;
    const int row_m1 = np;
    const double lsum = top_p + top_m;

    w(row_p1, 0) = 1.0;       // Q_1
    w(row_m1, kp) = 1.0;      // Q'_1

    const int shared_p = std::min(np, kp);
    for (int r = 2; r <= shared_p; ++r) {
        const double lam = ga.pos[static_cast<std::size_t>(r - 1)];
        const double mu = gb.pos[static_cast<std::size_t>(r - 1)];
        const int arow = r - 1;
        const int bcol = r - 1;
        if (lam >= mu) {
            sets.i1_plus.push_back(r);
            const double ratio = (lam > 0.0) ? clamp01(mu / lam) : 1.0;
            const double rem = 1.0 - ratio;
            w(arow, bcol) += ratio;
            w(row_p1, bcol) += (top_m / lsum) * rem;
            w(row_m1, bcol) += (top_p / lsum) * rem;
        } else {
            sets.i2_plus.push_back(r);
            const double den = top_p - lam;
            const double c = (den > 0.0) ? clamp01((top_p - mu) / den) : 0.0;
            w(arow, bcol) += c;
            w(row_p1, bcol) += 1.0 - c;
        }
    }
    for (int r = shared_p + 1; r <= np; ++r) sets.i3_plus.push_back(r);  // image 0
    for (int r = shared_p + 1; r <= kp; ++r) {
        sets.i4_plus.push_back(r);
        const double mu = gb.pos[static_cast<std::size_t>(r - 1)];
        const int bcol = r - 1;
        w(row_p1, bcol) += std::max(0.0, (top_m + mu) / lsum);
        w(row_m1, bcol) += std::max(0.0, (top_p - mu) / lsum);
    }

    const int shared_m = std::min(nm, km);
    for (int r = 2; r <= shared_m; ++r) {
        const double lam = ga.neg[static_cast<std::size_t>(r - 1)];
        const double mu = gb.neg[static_cast<std::size_t>(r - 1)];
        const int arow = np + (r - 1);
        const int bcol = kp + (r - 1);
        if (lam >= mu) {
            sets.i1_minus.push_back(r);
            const double ratio = (lam > 0.0) ? clamp01(mu / lam) : 1.0;
            const double rem = 1.0 - ratio;
            w(arow, bcol) += ratio;
            w(row_p1, bcol) += (top_m / lsum) * rem;
            w(row_m1, bcol) += (top_p / lsum) * rem;
        } else {
            sets.i2_minus.push_back(r);
            const double den = top_m - lam;
            const double c = (den > 0.0) ? clamp01((top_m - mu) / den) : 0.0;
            w(arow, bcol) += c;
            w(row_m1, bcol) += 1.0 - c;
        }
    }
    for (int r = shared_m + 1; r <= nm; ++r) sets.i3_minus.push_back(r);  // image 0
    for (int r = shared_m + 1; r <= km; ++r) {
        sets.i4_minus.push_back(r);
        const double mu = gb.neg[static_cast<std::size_t>(r - 1)];
        const int bcol = kp + (r - 1);
        w(row_p1, bcol) += std::max(0.0, (top_m - mu) / lsum);
        w(row_m1, bcol) += std::max(0.0, (top_p + mu) / lsum);
    }

    std::vector<std::vector<cplx>> avecs = ga.pos_vecs;
    avecs.insert(avecs.end(), ga.neg_vecs.begin(), ga.neg_vecs.end());
    std::vector<std::vector<cplx>> bvecs = gb.pos_vecs;
    bvecs.insert(bvecs.end(), gb.neg_vecs.begin(), gb.neg_vecs.end());

    SynthResult res;
    res.op = map_from_projector_weights(avecs, bvecs, w, n, k);
    res.cert.kind = ConstructionKind::pu_equal_norms;
    res.cert.weights = std::move(w);
    res.cert.index_sets = std::move(sets);

    // Unitality is checked, never renormalized: a parameter regime that
    // breaks it must surface as an error.
    assert_postcondition(check_unital(res.op) <= 1e-8,
                         "synth_pu_equal_norms: unitality postcondition failed");
    assert_postcondition(schatten_norm(apply(res.op, a) - b, PNorm::inf) <= 1e-8,
                         "synth_pu_equal_norms: mapping postcondition failed");
    return res;
}

SuperOperator synth_pu_shrink_2x2(double p, double x) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("synth_pu_shrink_2x2: need 0 < p < 1");
    if (!(x > 0.0)) throw std::invalid_argument("synth_pu_shrink_2x2: need x > 0");
    const double q = (p + x) / (1.0 + x);
    auto action = [q](const HermitianMatrix& m) {
        CMatrix out(2, 2);
        out(0, 0) = q * m(0, 0).real() + (1.0 - q) * m(1, 1).real();
        out(1, 1) = m(1, 1).real();
        return HermitianMatrix::symmetrized(out);
    };
    return superop_from_action(2, 2, action);
}

SuperOperator synth_ptp_shrink_2x2(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("synth_ptp_shrink_2x2: need 0 <= p <= 1");
    auto action = [p](const HermitianMatrix& m) {
        CMatrix out(2, 2);
        out(0, 0) = p * m(0, 0).real();
        out(1, 1) = m(1, 1).real() + (1.0 - p) * m(0, 0).real();
        return HermitianMatrix::symmetrized(out);
    };
    return superop_from_action(2, 2, action);
}

SynthResult synth_ptp_equal_norms(const HermitianMatrix& a, const HermitianMatrix& b) {
    const Spectrum sa = eig_hermitian(a);
    const Spectrum sb = eig_hermitian(b);
    const double sap = plus_norm_1(sa.eigenvalues);
    const double sam = minus_norm_1(sa.eigenvalues);
    const double sbp = plus_norm_1(sb.eigenvalues);
    const double sbm = minus_norm_1(sb.eigenvalues);
    if (std::abs(sap - sbp) > kMarginTol || std::abs(sam - sbm) > kMarginTol)
        throw std::invalid_argument(
            "synth_ptp_equal_norms: part trace norms differ by more than 1e-9");

    const int n = a.dim();
    const int k = b.dim();
    const double ztol_a = jordan_zero_tolerance(sa.eigenvalues);
    const double ztol_b = jordan_zero_tolerance(sb.eigenvalues);

    int r = n;  // size of A's nonnegative block (zeros included)
    for (int i = 0; i < n; ++i)
        if (sa.eigenvalues[static_cast<std::size_t>(i)] < -ztol_a) {
            r = i;
            break;
        }
    int s = k;
    for (int i = 0; i < k; ++i)
        if (sb.eigenvalues[static_cast<std::size_t>(i)] < -ztol_b) {
            s = i;
            break;
        }

    std::vector<double> db_plus;   // diagonal of D_B^+ (PSD)
    std::vector<double> db_minus;  // diagonal of D_B^- (magnitudes, PD)
    for (int i = 0; i < s; ++i)
        db_plus.push_back(std::max(0.0, sb.eigenvalues[static_cast<std::size_t>(i)]));
    for (int i = s; i < k; ++i) db_minus.push_back(-sb.eigenvalues[static_cast<std::size_t>(i)]);
    const double tr_db_plus = std::accumulate(db_plus.begin(), db_plus.end(), 0.0);
    const double tr_db_minus = std::accumulate(db_minus.begin(), db_minus.end(), 0.0);
    const double tiny = 1e-12 * std::max(1.0, std::abs(sb.eigenvalues.front()) +
                                                  std::abs(sb.eigenvalues.back()));

    const CMatrix& u = sa.eigenvectors;
    const CMatrix& v = sb.eigenvectors;

    auto phi1 = superop_from_action(
        n, n, [&](const HermitianMatrix& x) {
            return HermitianMatrix::symmetrized(adjoint(u) * x.mat() * u);
        });

    // Block pinch plus trace redistribution onto B's diagonal blocks. A
    // zero-trace target block receives the source trace uniformly, and an
    // empty target block routes it uniformly over the whole output, which
    // keeps the map trace-preserving on all of H_n and agrees with the
    // nominal formula wherever it is defined.
    auto phi2 = superop_from_action(n, k, [&](const HermitianMatrix& x) {
        double tx = 0.0;
        for (int i = 0; i < r; ++i) tx += x(i, i).real();
        double ty = 0.0;
        for (int i = r; i < n; ++i) ty += x(i, i).real();

        CMatrix out(k, k);
        if (r > 0) {
            if (s == 0) {
                for (int d = 0; d < k; ++d) out(d, d) += tx / k;
            } else if (tr_db_plus > tiny) {
                for (int d = 0; d < s; ++d)
                    out(d, d) += (tx / tr_db_plus) * db_plus[static_cast<std::size_t>(d)];
            } else {
                for (int d = 0; d < s; ++d) out(d, d) += tx / s;
            }
        }
        if (r < n) {
            if (s == k) {
                for (int d = 0; d < k; ++d) out(d, d) += ty / k;
            } else if (tr_db_minus > tiny) {
                for (int d = 0; d < k - s; ++d)
                    out(s + d, s + d) += (ty / tr_db_minus) * db_minus[static_cast<std::size_t>(d)];
            } else {
                for (int d = 0; d < k - s; ++d) out(s + d, s + d) += ty / (k - s);
            }
        }
        return HermitianMatrix::symmetrized(out);
    });

    auto phi3 = superop_from_action(
        k, k, [&](const HermitianMatrix& x) {
            return HermitianMatrix::symmetrized(v * x.mat() * adjoint(v));
        });

    SynthResult res;
    res.op = compose(phi3, compose(phi2, phi1));
    res.cert.kind = ConstructionKind::ptp_composed_equal_norms;

    assert_postcondition(check_trace_preserving(res.op) <= 1e-8,
                         "synth_ptp_equal_norms: trace preservation postcondition failed");
    assert_postcondition(schatten_norm(apply(res.op, a) - b, PNorm::inf) <= 1e-8,
                         "synth_ptp_equal_norms: mapping postcondition failed");
    return res;
}

SynthResult synth_ptp(const HermitianMatrix& a, const HermitianMatrix& b) {
    const FeasibilityVerdict verdict = feasible_ptp(a, b);
    if (!verdict.feasible)
        throw infeasible_error("synth_ptp: no PTP map exists for this pair (failing " +
                               verdict.failing_condition.value_or("?") + ")");

    const Spectrum sa = eig_hermitian(a);
    const std::vector<double> eb = hermitian_eigenvalues(b);
    const double sbp = plus_norm_1(eb);
    if (std::abs(plus_norm_1(sa.eigenvalues) - sbp) <= kMarginTol)
        return synth_ptp_equal_norms(a, b);

    // Bridge A -> A' with ||A'_+||_1 = ||B_+||_1 at constant trace. Every
    // step pinches onto the plane of the current largest-positive and
    // most-negative eigenvalues and shrinks there; the iterate stays
    // diagonal in A's eigenbasis, so only the eigenvalue vector evolves.
    const int n = a.dim();
    const CMatrix& u = sa.eigenvectors;
    std::vector<double> d = sa.eigenvalues;

    SuperOperator bridge = identity_superop(n);
    std::vector<ConstructionCert> steps;
    for (int iter = 0;; ++iter) {
        const double excess = plus_norm_1(d) - sbp;
        if (excess <= 1e-12 * std::max(1.0, sbp)) break;
        if (iter > n)
            throw std::runtime_error("synth_ptp: shrink bridge failed to terminate");

        int ti = static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
        int bi = static_cast<int>(std::min_element(d.begin(), d.end()) - d.begin());
        const double x = d[static_cast<std::size_t>(ti)];
        const double y = -d[static_cast<std::size_t>(bi)];
        if (!(x > 0.0) || !(y > 0.0))
            throw std::runtime_error("synth_ptp: shrink bridge lost sign structure");

        const double red = std::min({excess, x, y});
        const double p = 1.0 - red / x;

        auto step_action = [&u, ti, bi, p, n](const HermitianMatrix& xin) {
            CMatrix y0 = adjoint(u) * xin.mat() * u;
            CMatrix z(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const bool i_in = (i == ti || i == bi);
                    const bool j_in = (j == ti || j == bi);
                    if (i_in == j_in) z(i, j) = y0(i, j);
                }
            const double aa = y0(ti, ti).real();
            const double bb = y0(bi, bi).real();
            z(ti, ti) = p * aa;
            z(bi, bi) = bb + (1.0 - p) * aa;
            z(ti, bi) = 0.0;
            z(bi, ti) = 0.0;
            return HermitianMatrix::symmetrized(u * z * adjoint(u));
        };
        bridge = compose(superop_from_action(n, n, step_action), bridge);

        d[static_cast<std::size_t>(ti)] = p * x;
        d[static_cast<std::size_t>(bi)] += (1.0 - p) * x;

        steps.emplace_back();
        steps.back().kind = ConstructionKind::ptp_shrink_step;
        steps.back().shrink_params = ShrinkParams{p, red, x};
    }

    CMatrix a1(n, n);
    for (int l = 0; l < n; ++l) {
        const double lam = d[static_cast<std::size_t>(l)];
        if (lam == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a1(i, j) += lam * u(i, l) * std::conj(u(j, l));
    }
    const SynthResult tail = synth_ptp_equal_norms(HermitianMatrix::symmetrized(a1), b);

    SynthResult res;
    res.op = compose(tail.op, bridge);
    res.cert.kind = ConstructionKind::ptp_composed_equal_norms;
    res.cert.steps = std::move(steps);

    assert_postcondition(check_trace_preserving(res.op) <= 1e-8,
                         "synth_ptp: trace preservation postcondition failed");
    assert_postcondition(schatten_norm(apply(res.op, a) - b, PNorm::inf) <= 1e-7,
                         "synth_ptp: mapping postcondition failed");
    return res;
}

SuperOperator scaling_ray_map(const HermitianMatrix& a, const HermitianMatrix& b,
                              std::span<const cplx> x) {
    if (static_cast<int>(x.size()) != a.dim())
        throw std::invalid_argument("scaling_ray_map: vector length must equal dim(A)");
    cplx quad = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) quad += std::conj(x[static_cast<std::size_t>(i)]) *
                                                  a(i, j) * x[static_cast<std::size_t>(j)];
    const double denom = quad.real();
    if (denom <= 1e-10)
        throw std::invalid_argument("scaling_ray_map: x*Ax must exceed 1e-10");

    const int n = a.dim();
    const int k = b.dim();
    auto action = [&](const HermitianMatrix& m) {
        cplx num = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                num += std::conj(x[static_cast<std::size_t>(i)]) * m(i, j) *
                       x[static_cast<std::size_t>(j)];
        return HermitianMatrix::symmetrized((num.real() / denom) * b.mat());
    };
    return superop_from_action(n, k, action);
}

SuperOperator scaling_ray_map(const HermitianMatrix& a, const HermitianMatrix& b) {
    const Spectrum sa = eig_hermitian(a);
    std::vector<cplx> top(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) top[static_cast<std::size_t>(i)] = sa.eigenvectors(i, 0);
    return scaling_ray_map(a, b, top);
}

}  // namespace posmap
