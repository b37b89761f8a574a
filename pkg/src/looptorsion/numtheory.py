"""Primality, quadratic residues, and the torsion-prime arithmetic.

Two classification routes are implemented and kept strictly separate:

* the residue route: p = 13 or 23 mod 24 is provably non-torsion for the
  reference parameter family, because 3 is then a quadratic residue
  while -2 is not, so -2 cannot be a power of 3;
* the brute-force route: walk the powers of 3 (or the coefficient
  recurrence for arbitrary parameters) modulo p until the cycle closes.

The classical heuristic "3 a non-residue implies 3 is a primitive root",
which would make the classes 5, 7, 17, 19 mod 24 always solvable, is
*not* sound and is never used as a decision rule here; the census
records it as an expectation and reports every prime that contradicts
it (the smallest offenders are p = 103 in class 7 and p = 41 in
class 17).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod

from .presentation import Params

#: Strong-pseudoprime bases that decide primality below this bound.
DETERMINISTIC_PRIMALITY_BOUND = 330_000_000_000_000
_MR_BASES = (2, 3, 5, 7, 11, 13, 17)

#: The residue-rule expectations claimed for the reference family,
#: keyed by p mod 24.  Only the "non-torsion" half is a sound decision
#: rule; the "torsion" half is an expectation under empirical test.
RULE_EXPECTATION = {
    5: "torsion",
    7: "torsion",
    17: "torsion",
    19: "torsion",
    13: "non-torsion",
    23: "non-torsion",
}


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid below 3.3e14."""
    if n >= DETERMINISTIC_PRIMALITY_BOUND:
        raise ValueError(f"primality is only decided deterministically below {DETERMINISTIC_PRIMALITY_BOUND}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int, what: str = "p") -> None:
    if not is_prime(p):
        raise ValueError(f"{what} = {p} is not prime")


def sieve_primes(bound: int) -> list[int]:
    """All primes strictly below bound."""
    if bound <= 2:
        return []
    flags = bytearray([1]) * bound
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(bound) if flags[i]]


_SMALL_PRIMES = sieve_primes(10_000)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        for p in _split(n):
            out[p] = out.get(p, 0) + 1
    return out


def _split(n: int) -> list[int]:
    if is_prime(n):
        return [n]
    d = _pollard_rho(n)
    return _split(d) + _split(n // d)


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise RuntimeError(f"failed to factor {n}")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion; p must be an odd prime."""
    _require_prime(p)
    if p == 2:
        raise ValueError("the Legendre symbol needs an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def multiplicative_order(a: int, p: int) -> int:
    _require_prime(p)
    if a % p == 0:
        raise ValueError("a must be a unit mod p")
    e = p - 1
    for q in factorize(p - 1):
        while e % q == 0 and pow(a, e // q, p) == 1:
            e //= q
    return e


def is_primitive_root(g: int, p: int) -> bool:
    """Whether g generates the multiplicative group mod p."""
    _require_prime(p)
    if gcd(g, p) != 1:
        raise ValueError("g must be coprime to p")
    return multiplicative_order(g, p) == p - 1


@lru_cache(maxsize=None)
def power_witness(p: int) -> int | None:
    """Least m >= 2 with 2 + 3^m = 0 mod p, or None if no power works.

    This is the brute-force oracle: it walks the full cycle of powers of
    3 mod p, so a None answer is an exhaustive check.
    """
    _require_prime(p)
    if p in (2, 3):
        raise ValueError("p must be a prime other than 2 and 3")
    target = p - 2
    x = 3 % p
    first = 1 if x == target else None
    m = 1
    while True:
        x = x * 3 % p
        m += 1
        if x == 3 % p:
            break
        if first is None and x == target:
            first = m
    ord3 = m - 1
    if first is None:
        return None
    return first if first >= 2 else first + ord3


@dataclass(frozen=True)
class PrimeClassification:
    prime: int
    verdict: str  # "torsion" | "non-torsion"
    mechanism: str  # "residue-rule" | "power-witness" | "divisor-witness" | "exhausted-cycle"
    witness: int | None
    mod24: int
    mod12: int
    mod8: int
    legendre3: int | None
    legendre_minus2: int | None

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "verdict": self.verdict,
            "mechanism": self.mechanism,
            "witness": self.witness,
            "residues": {"mod24": self.mod24, "mod12": self.mod12, "mod8": self.mod8},
            "legendre3": self.legendre3,
            "legendre_minus2": self.legendre_minus2,
        }


def classify_prime_theorem1(p: int) -> PrimeClassification:
    """Torsion verdict for the reference family (a_m = 2 + 3^m).

    Primes 13 or 23 mod 24 are settled by the sound residue rule; every
    other prime is settled by the brute-force power walk.  The claimed
    positive rule for classes 5, 7, 17, 19 is never used to decide.
    """
    _require_prime(p)
    if p in (2, 3):
        raise ValueError("p must be a prime other than 2 and 3")
    l3 = legendre(3, p)
    lm2 = legendre(-2, p)
    mod24 = p % 24
    base = dict(prime=p, mod24=mod24, mod12=p % 12, mod8=p % 8, legendre3=l3, legendre_minus2=lm2)
    if mod24 in (13, 23):
        return PrimeClassification(verdict="non-torsion", mechanism="residue-rule", witness=None, **base)
    m = power_witness(p)
    if m is None:
        return PrimeClassification(verdict="non-torsion", mechanism="exhausted-cycle", witness=None, **base)
    assert (2 + 3**m) % p == 0
    return PrimeClassification(verdict="torsion", mechanism="power-witness", witness=m, **base)


@lru_cache(maxsize=None)
def divides_some_am(params: Params, q: int) -> int | None:
    """Least m >= 2 with a_m = 0 mod q, or None when the cycle closes first.

    Iterates the coefficient recurrence modulo q.  The state space has at
    most q^2 elements, so repetition (and hence termination) occurs
    within q^2 + 1 iterations; a first-repeat check stops far earlier in
    practice.
    """
    _require_prime(q, "q")
    a_, b_, c_, d_ = params.a % q, params.b % q, params.c % q, params.d % q
    state = (params.a2 % q, params.b2 % q)
    seen: set[tuple[int, int]] = set()
    m = 2
    cap = q * q + 1
    steps = 0
    while state not in seen:
        if state[0] == 0:
            return m
        seen.add(state)
        state = ((a_ + b_ * state[0] + c_ * state[1]) % q, d_ * state[0] % q)
        m += 1
        steps += 1
        if steps > cap:
            raise RuntimeError("cycle-detection bound exceeded")  # unreachable by pigeonhole
    return None


def classify_prime_general(params: Params, q: int) -> PrimeClassification:
    """Torsion verdict for arbitrary parameters, via the recurrence walk."""
    _require_prime(q, "q")
    base = dict(
        prime=q,
        mod24=q % 24,
        mod12=q % 12,
        mod8=q % 8,
        legendre3=legendre(3, q) if q > 3 else None,
        legendre_minus2=legendre(-2, q) if q > 2 else None,
    )
    m = divides_some_am(params, q)
    if m is None:
        return PrimeClassification(verdict="non-torsion", mechanism="exhausted-cycle", witness=None, **base)
    seq_a = params.a2
    seq_b = params.b2
    for _ in range(m - 2):
        seq_a, seq_b = params.a + params.b * seq_a + params.c * seq_b, params.d * seq_a
    assert seq_a % q == 0
    return PrimeClassification(verdict="torsion", mechanism="divisor-witness", witness=m, **base)


@dataclass
class CensusRow:
    residue: int
    count: int = 0
    torsion: int = 0
    non_torsion: int = 0
    expectation: str | None = None
    discrepancies: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "class": self.residue,
            "count": self.count,
            "torsion": self.torsion,
            "non_torsion": self.non_torsion,
            "paper_expectation": self.expectation,
            "discrepancies": self.discrepancies,
        }


def census(bound: int, mode: str = "theorem1", params: Params | None = None) -> list[CensusRow]:
    """Classify every prime below bound and aggregate by residue mod 24.

    mode "theorem1" uses the reference-family classifier and skips 2 and
    3; mode "general" classifies every prime through the recurrence walk
    for the given params.  Rows carry the residue-rule expectation where
    one exists and list every prime whose verdict contradicts it.
    """
    if bound < 25:
        raise ValueError("bound must be at least 25")
    if mode == "general" and params is None:
        raise ValueError("general mode needs params")
    if mode not in ("theorem1", "general"):
        raise ValueError(f"unknown census mode {mode!r}")
    rows: dict[int, CensusRow] = {}
    for p in sieve_primes(bound):
        if mode == "theorem1":
            if p in (2, 3):
                continue
            cls = classify_prime_theorem1(p)
            expectation = RULE_EXPECTATION.get(p % 24)
        else:
            cls = classify_prime_general(params, p)
            expectation = None
        row = rows.get(p % 24)
        if row is None:
            row = rows[p % 24] = CensusRow(residue=p % 24, expectation=expectation)
        row.count += 1
        if cls.verdict == "torsion":
            row.torsion += 1
        else:
            row.non_torsion += 1
        if expectation is not None and cls.verdict != expectation:
            row.discrepancies.append(p)
    return [rows[r] for r in sorted(rows)]


def census_table(rows: list[CensusRow]) -> str:
    """Fixed-width text rendering of a census."""
    header = f"{'class':>5} {'count':>7} {'torsion':>8} {'non-torsion':>12}  {'expected':<12} {'discrepancies'}"
    lines = [header]
    for row in rows:
        if row.discrepancies:
            preview = ", ".join(str(p) for p in row.discrepancies[:4])
            if len(row.discrepancies) > 4:
                preview += ", ..."
            disc = f"{len(row.discrepancies)} ({preview})"
        else:
            disc = "0"
        lines.append(
            f"{row.residue:>5} {row.count:>7} {row.torsion:>8} {row.non_torsion:>12}  "
            f"{row.expectation or '-':<12} {disc}"
        )
    return "\n".join(lines) + "\n"


def theorem2_params(exceptions) -> Params:
    """Parameters whose torsion primes are exactly the primes outside the set.

    With a = product of the given primes and (b, c, d, a2, b2) =
    (1, 0, 0, 1, 0) the recurrence degenerates to a_m = 1 + a(m-2).
    """
    members = list(exceptions)
    for p in members:
        _require_prime(p)
    if len(set(members)) != len(members):
        raise ValueError("the excluded primes must be distinct")
    return Params(a=prod(members), b=1, c=0, d=0, a2=1, b2=0)
