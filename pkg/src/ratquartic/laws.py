"""Two- and three-sided evaluation of the rational quartic reciprocity laws.

Each verifier computes every side through its own call graph: the
"algebraic" sides go through quadratic symbols of explicit algebraic
integers (alpha, eps), the "quartic" sides through exponentiation.
A report whose hypotheses fail is marked skipped rather than raising.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd, prod

from . import oracles
from .alpha import AlphaTriple, alpha_triple, eval_alpha_symbol
from .arith import factorize, four_one_primes, jacobi
from .errors import DomainError, InvariantError, NoNegativeNormUnit
from .pell import eval_unit_symbol_composite, fundamental_negative_unit
from .quartic import quartic_symbol_composite, quartic_symbol_prime, quartic_symbol_two
from .twosquares import cornacchia_prime, two_squares_composite

LAWS = ("ec", "burde", "gauss2", "scholz", "scholz_mutual", "furuta")


@dataclass
class LawReport:
    law: str
    inputs: dict
    sides: list = field(default_factory=list)
    skipped_reason: str | None = None

    @property
    def match(self):
        return self.skipped_reason is None and len(set(self.sides)) == 1

    @property
    def skipped(self):
        return self.skipped_reason is not None

    def to_json(self):
        return {
            "law": self.law,
            "inputs": dict(self.inputs),
            "sides": list(self.sides),
            "match": self.match,
            "skipped": self.skipped_reason,
        }


@lru_cache(maxsize=None)
def _parts(m):
    return tuple(four_one_primes(m, allow_eight=True))


@lru_cache(maxsize=None)
def negative_unit(m):
    """Cached fundamental_negative_unit, or None when no such unit exists."""
    try:
        return fundamental_negative_unit(m)
    except NoNegativeNormUnit:
        return None


def _odd_parts(m):
    parts = _parts(m)
    if 8 in parts:
        raise DomainError(f"{m} must be odd here")
    return parts


def is_admissible(m, n):
    """Coprime moduli whose cross Legendre symbols (p_i/q_j) are all +1.

    Both directions are evaluated; they agree by quadratic reciprocity for
    primes = 1 mod 4, and a disagreement is reported as inadmissible.
    """
    return _admissibility_failure(m, n) is None


def _admissibility_failure(m, n):
    pm, pn = _odd_parts(m), _odd_parts(n)
    if gcd(m, n) != 1:
        return f"gcd({m}, {n}) = {gcd(m, n)}"
    for p in pm:
        for q in pn:
            if jacobi(p, q) != 1 or jacobi(q, p) != 1:
                return f"({p}/{q}) = {jacobi(p, q)}"
    return None


def _require_prime_1mod4(p):
    if _parts(p) != (p,):
        raise DomainError(f"{p} is not a prime = 1 mod 4")


# -- individual laws -----------------------------------------------------------


def verify_ec(m, p):
    """((A + B*sqrt(m))/p) against (p/m)_4; m odd or m = 8m'."""
    parts = _parts(m)
    _require_prime_1mod4(p)
    report = LawReport("ec", {"m": m, "p": p})
    if 8 in parts and p % 8 != 1:
        report.skipped_reason = f"{p} is not 1 mod 8"
        return report
    odd = m // 8 if 8 in parts else m
    reason = _admissibility_failure(odd, p)
    if reason:
        report.skipped_reason = reason
        return report
    report.sides = [eval_alpha_symbol(_alpha(m), p), quartic_symbol_composite(p, m)]
    return report


@lru_cache(maxsize=None)
def _alpha(m):
    return alpha_triple(m)


def verify_ec_triple(t: AlphaTriple, p):
    """The EC law for an explicitly supplied triple (odd radicand)."""
    report = LawReport("ec", {"m": t.m, "p": p, "A": t.A, "B": t.B, "C": t.C})
    reason = _admissibility_failure(t.m, p)
    if reason:
        report.skipped_reason = reason
        return report
    report.sides = [eval_alpha_symbol(t, p), quartic_symbol_composite(p, t.m)]
    return report


def verify_burde(m, n, rep_m=None, rep_n=None):
    """(m/n)_4 (n/m)_4 = ((ac - bd)/m) = ((ac - bd)/n).

    rep_m = (a, b) and rep_n = (c, d) default to the canonical
    representations; any primitive ones with a, c odd may be passed.
    """
    report = LawReport("burde", {"m": m, "n": n})
    reason = _admissibility_failure(m, n)
    if reason:
        report.skipped_reason = reason
        return report
    a, b = rep_m or _rep(m)
    c, d = rep_n or _rep(n)
    if a * a + b * b != m or c * c + d * d != n or (a * c) % 2 == 0:
        raise DomainError(f"bad representations {(a, b)} of {m} / {(c, d)} of {n}")
    report.inputs.update(a=a, b=b, c=c, d=d)
    x = a * c - b * d
    report.sides = [
        quartic_symbol_composite(m, n) * quartic_symbol_composite(n, m),
        jacobi(x, m),
        jacobi(x, n),
    ]
    return report


@lru_cache(maxsize=None)
def _rep(m):
    if m == 1:
        return 1, 0
    r = two_squares_composite(m)
    return r.a, r.b


def gauss_coordinates(p):
    """(a, b) with p = a^2 + 16 b^2, a = 1 mod 4, b > 0, for prime p = 1 mod 8."""
    rep = cornacchia_prime(p)
    if rep.b % 4:
        raise InvariantError(f"{p} = {rep.a}^2 + {rep.b}^2 with b not divisible by 4")
    a = rep.a if rep.a % 4 == 1 else -rep.a
    return a, rep.b // 4


def verify_gauss2(p):
    """(2/p)_4 = (-1)^b = (p/2)_4 (2/(a - 4b)) for p = a^2 + 16 b^2."""
    _require_prime_1mod4(p)
    report = LawReport("gauss2", {"p": p})
    if p % 8 != 1:
        report.skipped_reason = f"{p} is not 1 mod 8"
        return report
    a, b = gauss_coordinates(p)
    report.inputs.update(a=a, b=b)
    # (2/x) depends only on |x| mod 8.
    report.sides = [
        quartic_symbol_prime(2, p),
        -1 if b % 2 else 1,
        quartic_symbol_two(p) * jacobi(2, abs(a - 4 * b)),
    ]
    return report


def verify_scholz(m, n):
    """(eps_m/n) = (m/n)_4 (n/m)_4."""
    report = LawReport("scholz", {"m": m, "n": n})
    reason = _admissibility_failure(m, n)
    if reason is None and negative_unit(m) is None:
        reason = f"no unit of norm -1 for m = {m}"
    if reason:
        report.skipped_reason = reason
        return report
    e = negative_unit(m)
    report.inputs.update(t=e.t, u=e.u)
    report.sides = [
        eval_unit_symbol_composite(e, n),
        quartic_symbol_composite(m, n) * quartic_symbol_composite(n, m),
    ]
    return report


def verify_scholz_mutual(m, n):
    """(eps_m/n) = (eps_n/m)."""
    report = LawReport("scholz_mutual", {"m": m, "n": n})
    reason = _admissibility_failure(m, n)
    if reason is None:
        for k in (m, n):
            if negative_unit(k) is None:
                reason = f"no unit of norm -1 for {k}"
                break
    if reason:
        report.skipped_reason = reason
        return report
    report.sides = [
        eval_unit_symbol_composite(negative_unit(m), n),
        eval_unit_symbol_composite(negative_unit(n), m),
    ]
    return report


def verify_furuta(m, n, splits=()):
    """(eps_m/n) against the product of (eps_p/n) over p | m.

    Each r in ``splits`` (a divisor of m) appends the side
    (eps_r/n)(eps_{m/r}/n) of the two-factor corollary.
    """
    report = LawReport("furuta", {"m": m, "n": n})
    reason = _admissibility_failure(m, n)
    if reason is None and negative_unit(m) is None:
        reason = f"no unit of norm -1 for m = {m}"
    for r in splits:
        if reason:
            break
        if r <= 1 or m % r or r == m:
            raise DomainError(f"{r} is not a proper divisor of {m}")
        for k in (r, m // r):
            if negative_unit(k) is None:
                reason = f"no unit of norm -1 for split factor {k}"
    if reason:
        report.skipped_reason = reason
        return report
    if splits:
        report.inputs["splits"] = list(splits)
    sides = [
        eval_unit_symbol_composite(negative_unit(m), n),
        prod(eval_unit_symbol_composite(negative_unit(q), n) for q in _odd_parts(m)),
    ]
    for r in splits:
        sides.append(
            eval_unit_symbol_composite(negative_unit(r), n)
            * eval_unit_symbol_composite(negative_unit(m // r), n)
        )
    report.sides = sides
    return report


def unit_splits(m):
    """Divisors r < m/r of m with r > 1 where both eps_r and eps_{m/r} exist."""
    parts = _odd_parts(m)
    out = []
    for k in range(1, len(parts)):
        for combo in combinations(parts, k):
            r = prod(combo)
            if r < m // r and negative_unit(r) and negative_unit(m // r):
                out.append(r)
    return sorted(out)


_VERIFIERS = {
    "ec": verify_ec,
    "burde": verify_burde,
    "gauss2": verify_gauss2,
    "scholz": verify_scholz,
    "scholz_mutual": verify_scholz_mutual,
    "furuta": verify_furuta,
}


def verify(law, **inputs):
    """Dispatch by law identifier ('scholz-mutual' is accepted as well)."""
    law = law.replace("-", "_")
    if law not in _VERIFIERS:
        raise DomainError(f"unknown law {law!r}")
    return _VERIFIERS[law](**inputs)


# -- oracle re-derivation --------------------------------------------------------


def oracle_sides(report):
    """Recompute a report's sides with the brute-force oracles only.

    Constructions (two-squares, units, triples) are taken from the report's
    inputs or rebuilt; every residue symbol is re-derived by enumeration.
    """
    if report.skipped:
        return []
    inp = report.inputs
    law = report.law
    qb = oracles.quadratic_symbol_bruteforce
    q4 = oracles.quartic_symbol_bruteforce
    if law == "ec":
        m, p = inp["m"], inp["p"]
        t = _alpha(m) if "A" not in inp else AlphaTriple(m, inp["A"], inp["B"], inp["C"])
        g = gcd(t.A, t.B)
        left = oracles.legendre_bruteforce(g, p) * oracles.algebraic_symbol_bruteforce(
            t.A // g, t.B // g, t.m, p
        )
        return [left, q4(p, _parts(m))]
    if law == "burde":
        m, n = inp["m"], inp["n"]
        x = inp["a"] * inp["c"] - inp["b"] * inp["d"]
        return [q4(m, _parts(n)) * q4(n, _parts(m)), qb(x, _parts(m)), qb(x, _parts(n))]
    if law == "gauss2":
        p, a, b = inp["p"], inp["a"], inp["b"]
        x = abs(a - 4 * b)
        two_x = qb(2, [q for q, e in factorize(x) for _ in range(e)]) if x > 1 else 1
        return [q4(2, (p,)), -1 if b % 2 else 1, (-1 if (p - 1) // 8 % 2 else 1) * two_x]

    def unit_symbol(k, n):
        e = negative_unit(k)
        return prod(oracles.algebraic_symbol_bruteforce(e.t, e.u, k, q) for q in _parts(n))

    m, n = inp["m"], inp["n"]
    if law == "scholz":
        return [unit_symbol(m, n), q4(m, _parts(n)) * q4(n, _parts(m))]
    if law == "scholz_mutual":
        return [unit_symbol(m, n), unit_symbol(n, m)]
    if law == "furuta":
        sides = [unit_symbol(m, n), prod(unit_symbol(q, n) for q in _parts(m))]
        sides += [unit_symbol(r, n) * unit_symbol(m // r, n) for r in inp.get("splits", [])]
        return sides
    raise DomainError(f"unknown law {law!r}")


# -- sweeps ------------------------------------------------------------------------


@dataclass
class SweepResult:
    law: str
    checked: int = 0
    matched: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    reports: list = field(default_factory=list)

    def summary(self):
        return {
            "law": self.law,
            "checked": self.checked,
            "matched": self.matched,
            "skipped": self.skipped,
            "counterexamples": [r.to_json() for r in self.counterexamples],
        }


def sweep_instances(law, m_values, n_values=()):
    """Enumerate the verifier argument tuples of a sweep, in output order."""
    law = law.replace("-", "_")
    if law == "gauss2":
        return [(p,) for p in n_values]
    if law == "furuta":
        return [(m, n, tuple(unit_splits(m))) for m in m_values for n in n_values]
    if law in _VERIFIERS:
        return [(m, n) for m in m_values for n in n_values]
    raise DomainError(f"unknown law {law!r}")


def _run(args):
    law, inst = args
    return _VERIFIERS[law](*inst)


def sweep(law, m_values, n_values=(), jobs=1, keep_reports=True):
    """Run a verifier over all instances and aggregate the verdicts.

    ``n_values`` are the second moduli (the primes p for 'ec' and
    'gauss2').  Output order is enumeration order whatever ``jobs`` is.
    """
    law = law.replace("-", "_")
    tasks = [(law, inst) for inst in sweep_instances(law, m_values, n_values)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        reports = [_run(t) for t in tasks]
    result = SweepResult(law)
    for r in reports:
        if r.skipped:
            result.skipped += 1
            continue
        result.checked += 1
        if r.match:
            result.matched += 1
        else:
            result.counterexamples.append(r)
    if keep_reports:
        result.reports = reports
    return result
