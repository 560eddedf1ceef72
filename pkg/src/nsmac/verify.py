"""Verification suites: each check compares two independent computations.

A suite is a generator of ``Check`` records.  The first failing check
carries the offending operands in serialized form.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .appendix import appendix_table
from .exactalg import ONE, Q, T, QTPoly, QTRational, XPolynomial
from .fillings import (
    _chi,
    coinversion_by_orientation,
    count_coinversion_triples,
    count_inversion_triples,
    enumerate_fillings,
    enumerate_non_attacking,
    stats,
)
from .hecke import E_recurrence, apply_Psi, apply_si, apply_Ti, intertwiner_coefficient
from .macdonald import E_combinatorial, E_integral, hook
from .shapes import (
    attacks,
    augmented_diagram,
    bruhat_lower_set,
    compositions,
    enumerate_triples,
    pi_shift,
    rearrangements,
    s_i,
)
from .symmetric import (
    D_mu,
    J_lambda,
    J_via_stable_limit,
    P_via_stable_limit,
    P_via_symmetrization,
    is_symmetric,
    schur_oracle,
    schur_via_keys,
)

__all__ = [
    "Check",
    "SUITES",
    "run_suite",
    "random_qtrational",
    "random_xpolynomial",
    "compositions_up_to",
    "partitions_up_to",
]


@dataclass
class Check:
    name: str
    passed: bool
    seconds: float = 0.0
    detail: dict = field(default_factory=dict)


def compositions_up_to(n, max_degree):
    for d in range(max_degree + 1):
        yield from compositions(n, d)


def partitions_up_to(length, max_size, min_size=0):
    """Weakly decreasing tuples of the given length with min_size <= |lam| <= max_size."""
    for mu in compositions_up_to(length, max_size):
        if sum(mu) >= min_size and list(mu) == sorted(mu, reverse=True):
            yield mu


def random_qtrational(rng, max_deg=2, max_coeff=3, with_den=True):
    def poly():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = rng.randint(-max_coeff, max_coeff)
        p = QTPoly(terms)
        return p if p else QTPoly.const(1)

    num = poly()
    if with_den and rng.random() < 0.5:
        return QTRational(num, hook(rng.randint(0, 2), rng.randint(1, 2)))
    return QTRational(num)


def random_xpolynomial(rng, n, n_terms=3, exp_range=2):
    """A random Laurent polynomial with small exponents and coefficients."""
    terms = {}
    for _ in range(n_terms):
        exps = tuple(rng.randint(-exp_range, exp_range) for _ in range(n))
        terms[exps] = random_qtrational(rng)
    return XPolynomial(n, terms)


def _timed(name, fn, **detail):
    start = time.perf_counter()
    result = fn()
    extra = {}
    if isinstance(result, tuple):
        result, extra = result
    return Check(name, bool(result), time.perf_counter() - start, {**detail, **extra})


def _poly_detail(**polys):
    return {k: (v.to_records() if isinstance(v, XPolynomial) else v) for k, v in polys.items()}


# -- suites ----------------------------------------------------------------------

def suite_appendix_table(**_):
    for mu, expected in appendix_table().items():
        def run(mu=mu, expected=expected):
            got = E_combinatorial(mu)
            return got == expected, ({} if got == expected else _poly_detail(expected=expected, got=got))
        yield _timed(f"E{mu} matches the published table", run, mu=list(mu))


def suite_dual_engine(n=3, max_degree=4, **_):
    for mu in compositions_up_to(n, max_degree):
        def run(mu=mu):
            a, b = E_combinatorial(mu), E_recurrence(mu)
            return a == b, ({} if a == b else _poly_detail(combinatorial=a, recurrence=b))
        yield _timed(f"E{mu}: fillings == recurrence", run, mu=list(mu))


def _braid_pairs(n):
    """(i, j) adjacent mod n, and (i, j) commuting pairs."""
    adjacent = [(i, (i + 1) % n) for i in range(n)] if n >= 3 else []
    commuting = [
        (i, j) for i in range(n) for j in range(i + 1, n)
        if (j - i) % n not in (1, n - 1)
    ]
    return adjacent, commuting


def suite_operator_relations(n=3, seed=0, samples=20, **_):
    rng = random.Random(seed)
    polys = [random_xpolynomial(rng, n) for _ in range(samples)]
    adjacent, commuting = _braid_pairs(n)

    def quadratic():
        for f in polys:
            for i in range(n):
                tf = apply_Ti(f, i)
                if apply_Ti(tf, i) != tf.scale(T - 1) + f.scale(T):
                    return False, _poly_detail(f=f, i=i)
        return True

    def braid():
        for f in polys:
            for i, j in adjacent:
                lhs = apply_Ti(apply_Ti(apply_Ti(f, i), j), i)
                rhs = apply_Ti(apply_Ti(apply_Ti(f, j), i), j)
                if lhs != rhs:
                    return False, _poly_detail(f=f, i=i, j=j)
            for i, j in commuting:
                if apply_Ti(apply_Ti(f, j), i) != apply_Ti(apply_Ti(f, i), j):
                    return False, _poly_detail(f=f, i=i, j=j)
        return True

    def symmetry_criterion():
        for f in polys:
            for i in range(1, n):
                g = apply_Ti(f, i)
                a = f + g
                b = (XPolynomial.var(i + 1, n) * f).scale(T) + XPolynomial.var(i, n) * g
                if apply_si(a, i) != a or apply_si(b, i) != b:
                    return False, _poly_detail(f=f, i=i)
        return True

    yield _timed(f"quadratic relation, n={n}", quadratic, samples=samples)
    if n >= 3:
        yield _timed(f"braid relations, n={n}", braid, samples=samples)
    yield _timed(f"T_i symmetry criterion, n={n}", symmetry_criterion, samples=samples)


def suite_recurrence_steps(n=3, max_degree=3, **_):
    for mu in compositions_up_to(n, max_degree):
        def shift(mu=mu):
            lhs = E_combinatorial(pi_shift(mu))
            rhs = apply_Psi(E_combinatorial(mu)).scale(Q ** mu[-1])
            return lhs == rhs, ({} if lhs == rhs else _poly_detail(lhs=lhs, rhs=rhs))
        yield _timed(f"E{pi_shift(mu)} = q^{mu[-1]} Psi E{mu}", shift, mu=list(mu))
        for i in range(1, n):
            if mu[i - 1] <= mu[i]:
                continue

            def step(mu=mu, i=i):
                e = E_combinatorial(mu)
                lhs = E_combinatorial(s_i(mu, i))
                rhs = apply_Ti(e, i) + e.scale(intertwiner_coefficient(mu, i))
                return lhs == rhs, ({} if lhs == rhs else _poly_detail(lhs=lhs, rhs=rhs))
            yield _timed(f"E{s_i(mu, i)} = (T_{i} + c) E{mu}", step, mu=list(mu), i=i)


def suite_triangularity(n=3, max_degree=4, **_):
    for mu in compositions_up_to(n, max_degree):
        def run(mu=mu):
            e = E_combinatorial(mu)
            lower = bruhat_lower_set(mu)
            outside = sorted(lam for lam in e.support() if lam not in lower)
            ok = e.coefficient(mu) == ONE and not outside
            return ok, ({} if ok else {"outside": [list(x) for x in outside]})
        yield _timed(f"E{mu} triangular", run, mu=list(mu))


def _positive_after_division(p, k, size):
    r = p.specialize_q(k).exact_div(hook(0, 1) ** size)
    return all(c >= 0 for _, c in r.items())


def suite_integrality(n=3, max_degree=4, **_):
    for mu in compositions_up_to(n, max_degree):
        def run(mu=mu):
            e = E_integral(mu)
            if not e.is_polynomial_coefficients():
                return False
            for k in (0, 1, 2):
                for _, c in e.items():
                    try:
                        if not _positive_after_division(c.num, k, sum(mu)):
                            return False, {"k": k}
                    except ArithmeticError:
                        return False, {"k": k, "reason": "not divisible"}
            return True
        yield _timed(f"integral form of E{mu}", run, mu=list(mu))


def suite_rearrangement_invariance(max_size=4, max_length=3, max_m=3, **_):
    for length in range(1, max_length + 1):
        for lam in partitions_up_to(length, max_size):
            for m in range(1, max_m + 1):
                def run(lam=lam, m=m):
                    ref = D_mu(lam, m)
                    for mu in rearrangements(lam):
                        if D_mu(mu, m) != ref:
                            return False, {"mu": list(mu)}
                    return True
                yield _timed(f"D_mu invariant over rearrangements of {lam}, m={m}", run)


def suite_stable_limit(max_size=3, max_length=2, max_m=3, **_):
    for length in range(1, max_length + 1):
        for lam in partitions_up_to(length, max_size):
            for m in range(1, max_m + 1):
                def run(lam=lam, m=m):
                    ref = J_lambda(lam, m)
                    for mu in rearrangements(lam):
                        got = J_via_stable_limit(lam, mu, m)
                        if got != ref:
                            return False, {"mu": list(mu), **_poly_detail(J=ref, limit=got)}
                    return True
                yield _timed(f"stable limit = J{lam}, m={m}", run)


def suite_p_routes(max_size=3, length=3, **_):
    for lam in partitions_up_to(length, max_size):
        def run(lam=lam):
            b = P_via_symmetrization(lam)
            if not (is_symmetric(b) and b.coefficient(lam) == ONE):
                return False, {"reason": "route B not monic symmetric"}
            if b.map_coefficients(QTRational.invert_params) != b:
                return False, {"reason": "not invariant under q,t -> 1/q,1/t"}
            for mu in rearrangements(lam):
                a = P_via_stable_limit(lam, length, mu)
                if a != b:
                    return False, {"mu": list(mu), **_poly_detail(A=a, B=b)}
            return True
        yield _timed(f"P{lam}: stable limit == symmetrization", run)


def suite_schur(max_size=4, max_length=3, **_):
    for length in range(1, max_length + 1):
        for lam in partitions_up_to(length, max_size):
            def run(lam=lam):
                a, b = schur_via_keys(lam), schur_oracle(lam, len(lam))
                return a == b, ({} if a == b else _poly_detail(keys=a, ssyt=b))
            yield _timed(f"s{lam} from key polynomials", run)


def suite_triples(max_n=4, max_degree=3, **_):
    for n in range(1, max_n + 1):
        for mu in compositions_up_to(n, max_degree):
            def run(mu=mu, n=n):
                for sigma in enumerate_fillings(mu, alphabet=n, non_attacking=False):
                    st = stats(sigma)
                    if st.inv != count_inversion_triples(sigma) or st.coinv != count_coinversion_triples(sigma):
                        return False, {"filling": sigma.to_json()}
                return True
            yield _timed(f"inv/coinv == triple counts on all fillings of {mu}", run)


def suite_attack_pairs(max_n=4, max_degree=4, **_):
    for n in range(1, max_n + 1):
        for mu in compositions_up_to(n, max_degree):
            def run(mu=mu):
                boxes = augmented_diagram(mu)
                cover = {}
                for tr in enumerate_triples(mu):
                    for pair in (frozenset((tr.u, tr.v)), frozenset((tr.v, tr.w))):
                        cover[pair] = cover.get(pair, 0) + 1
                for u in boxes:
                    for v in boxes:
                        if u >= v or not attacks(u, v):
                            continue
                        pair = frozenset((u, v))
                        exempt = u[1] == v[1] == 0 and mu[u[0] - 1] <= mu[v[0] - 1]
                        want = 0 if exempt else 1
                        if cover.get(pair, 0) != want:
                            return False, {"pair": [list(u), list(v)]}
                return True
            yield _timed(f"attacking pairs of {mu} covered once by triples", run)


def suite_orientation(max_n=4, max_degree=3, **_):
    for n in range(1, max_n + 1):
        for mu in compositions_up_to(n, max_degree):
            def run(mu=mu):
                for sigma in enumerate_non_attacking(mu):
                    for tr in enumerate_triples(mu):
                        a = coinversion_by_orientation(sigma, tr)
                        b = _is_coinversion(sigma, tr)
                        if a != b:
                            return False, {"filling": sigma.to_json()}
                return True
            yield _timed(f"orientation criterion on {mu}", run)


def _is_coinversion(sigma, tr):
    return _chi(sigma, tr.u, tr.v) + _chi(sigma, tr.v, tr.w) - _chi(sigma, tr.u, tr.w) == 0


SUITES = {
    "appendix-table": suite_appendix_table,
    "dual-engine": suite_dual_engine,
    "operator-relations": suite_operator_relations,
    "recurrence-steps": suite_recurrence_steps,
    "triangularity": suite_triangularity,
    "integrality": suite_integrality,
    "rearrangement-invariance": suite_rearrangement_invariance,
    "stable-limit": suite_stable_limit,
    "p-routes": suite_p_routes,
    "schur": suite_schur,
    "triples": suite_triples,
    "attack-pairs": suite_attack_pairs,
    "orientation": suite_orientation,
}


def run_suite(name, stop_on_failure=True, **params):
    """Run a named suite; returns the list of checks performed."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    params = {k: v for k, v in params.items() if v is not None}
    out = []
    for check in SUITES[name](**params):
        out.append(check)
        if stop_on_failure and not check.passed:
            break
    return out
