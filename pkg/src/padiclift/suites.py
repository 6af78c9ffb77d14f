"""Reproducible verification suites behind the CLI's verify subcommand.

Each suite runs a battery of identity checks and returns CheckRecord rows:
aggregate rows carry check/failure counts, and every failing case is also
emitted individually with its inputs and residual so a red run is
diagnosable from the report alone.  All randomness flows through the
counter-based stream in rng.py, seeded per suite with fixed offsets, so a
(config, seed) pair reproduces byte-identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass, is_dataclass, fields as dc_fields

from . import buium, charsum, cohomo, gamma
from .charsum import PiRingElem, jacobi_sum, pi_ring
from .gfq import FqElem, fq_make
from .rng import CounterRng
from .witt_zq import ZqElem, ZqRing, zq_ring
from .zp_ring import PAdicInt, carry_cocycle, from_integer

MAX_FAILURE_RECORDS = 20  # per sub-check, to keep reports bounded

SUITE_SEED_OFFSET = {
    "carry": 0x10,
    "buium": 0x20,
    "gamma": 0x30,
    "charsum": 0x40,
}

SUITE_NAMES = ("carry", "buium", "gamma", "charsum")


@dataclass
class RunConfig:
    p: int | None = None
    n: int | None = None
    precision: int | None = None
    terms: int = 0
    seed: int = 0
    count: int = 200
    suite: str = "all"
    fmt: str = "json"
    fixtures: str | None = None


@dataclass
class CheckRecord:
    suite: str
    op: str
    inputs: dict
    passed: bool
    checks: int = 1
    failures: int = 0
    residual: object = None


def jsonable(v):
    """Reduce package values to JSON-ready data: flat, self-describing."""
    if isinstance(v, PAdicInt):
        return {"p": v.p, "n": 1, "N": v.precision, "digits": list(v.digits)}
    if isinstance(v, ZqElem):
        return {"p": v.ring.p, "n": v.ring.n, "N": v.ring.precision,
                "coeffs": [list(c.digits) for c in v.coeffs]}
    if isinstance(v, PiRingElem):
        digits = []
        for c in v.coeffs:
            block = []
            k = c
            for _ in range(v.ring.precision):
                block.append(k % v.ring.p)
                k //= v.ring.p
            digits.append(block)
        return {"p": v.ring.p, "n": 1, "N": v.ring.precision, "pi_coeffs": digits}
    if isinstance(v, FqElem):
        return {"p": v.field.p, "n": v.field.n, "coeffs": list(v.coeffs)}
    if is_dataclass(v) and not isinstance(v, type):
        return {f.name: jsonable(getattr(v, f.name)) for f in dc_fields(v)}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return repr(v)


class _Collector:
    """Accumulates one aggregate record per sub-check plus failure detail."""

    def __init__(self, suite: str, records: list[CheckRecord]):
        self.suite = suite
        self.records = records

    def run(self, op: str, inputs: dict, cases) -> None:
        checks = failures = 0
        detail: list[CheckRecord] = []
        for case_inputs, passed, residual in cases:
            checks += 1
            if not passed:
                failures += 1
                if len(detail) < MAX_FAILURE_RECORDS:
                    detail.append(CheckRecord(self.suite, op, jsonable(case_inputs),
                                              False, residual=jsonable(residual)))
        self.records.append(CheckRecord(self.suite, op, jsonable(inputs),
                                        failures == 0, checks, failures))
        self.records.extend(detail)


# ---------------------------------------------------------------------------
# carry suite

def _digit_add(p):
    return lambda a, b: (a + b) % p


def run_carry_suite(cfg: RunConfig) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    col = _Collector("carry", records)
    ps = [cfg.p] if cfg.p else [2, 3, 5, 7, 11, 13]

    for p in ps:
        F = cohomo.GroupValuedMap(lambda a, b, p=p: carry_cocycle(a, b, p),
                                  cohomo.ADDITIVE, name="carry_cocycle",
                                  combine=_digit_add(p))

        def cocycle_cases(p=p, F=F):
            for a in range(p):
                for b in range(p):
                    for c in range(p):
                        rep = cohomo.cocycle2_check(F, a, b, c)
                        yield {"p": p, "triple": [a, b, c]}, rep.passed, rep.residual

        col.run("carry_cocycle/cocycle2", {"p": p, "triples": p**3}, cocycle_cases())

        def star_cases(p=p):
            mod = p * p
            for x in range(mod):
                for y in range(mod):
                    got = from_integer(x, p, 2) + from_integer(y, p, 2)
                    want = from_integer(x + y, p, 2)
                    yield {"p": p, "pair": [x, y]}, got == want, got - want

        col.run("add/star_product_vs_integers", {"p": p, "pairs": p**4}, star_cases())
    return records


# ---------------------------------------------------------------------------
# buium suite

def sample_zq(ring: ZqRing, rng: CounterRng) -> ZqElem:
    bound = ring.p**ring.precision
    return ring.element([rng.below(bound) for _ in range(ring.n)])


def sample_padic(p: int, precision: int, rng: CounterRng) -> PAdicInt:
    return PAdicInt.from_integer(rng.below(p**precision), p, precision)


def run_buium_suite(cfg: RunConfig) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    col = _Collector("buium", records)
    rng = CounterRng(cfg.seed + SUITE_SEED_OFFSET["buium"])
    if cfg.p:
        configs = [(cfg.p, cfg.n or 1, cfg.precision or 4)]
    else:
        configs = [(5, 1, 4), (3, 2, 4), (7, 1, 3)]

    for p, n, N in configs:
        ring = zq_ring(fq_make(p, n), N)
        pairs = [(sample_zq(ring, rng), sample_zq(ring, rng))
                 for _ in range(cfg.count)]

        def sum_cases(pairs=pairs, p=p, n=n, N=N):
            for x, y in pairs:
                rep = buium.verify_sum_rule(x, y)
                yield {"p": p, "n": n, "N": N, "x": x, "y": y}, rep.passed, rep.residual

        def product_cases(pairs=pairs, p=p, n=n, N=N):
            for x, y in pairs:
                rep = buium.verify_product_rule(x, y)
                yield {"p": p, "n": n, "N": N, "x": x, "y": y}, rep.passed, rep.residual

        base = {"p": p, "n": n, "N": N, "pairs": cfg.count, "seed": cfg.seed}
        col.run("verify_sum_rule", base, sum_cases())
        col.run("verify_product_rule", base, product_cases())

        def teich_cases(ring=ring, p=p, n=n, N=N):
            zero = ring.with_precision(N - 1).zero()
            for v in ring.field.elements():
                d = buium.p_derivation(ring.teichmuller(v))
                yield {"p": p, "n": n, "N": N, "v": v}, d == zero, d

        col.run("p_derivation/vanishes_on_teichmuller",
                {"p": p, "n": n, "N": N, "values": p**n}, teich_cases())

    fq = buium.fermat_quotient(2, 5, 3)
    col.run("fermat_quotient/spot", {"k": 2, "p": 5, "N": 3},
            [({"k": 2}, fq.value == 19, fq)])
    return records


# ---------------------------------------------------------------------------
# gamma suite

def run_gamma_suite(cfg: RunConfig) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    col = _Collector("gamma", records)
    ps = [cfg.p] if cfg.p else [3, 5, 7]
    rng = CounterRng(cfg.seed + SUITE_SEED_OFFSET["gamma"])

    for p in ps:
        N = 3
        values = [gamma.gamma_p_integer(m, p, N) for m in range(p**N)]

        def feq_cases(p=p, N=N):
            for m in range(p**N):
                rep = gamma.functional_equation_check(from_integer(m, p, N))
                yield {"p": p, "x": m}, rep.passed, rep
        col.run("functional_equation", {"p": p, "N": N, "sweep": p**N}, feq_cases())

        def unit_cases(p=p):
            for m, v in enumerate(values):
                yield {"p": p, "m": m}, v.is_unit(), v
        col.run("gamma_p/unit_valued", {"p": p, "N": N, "sweep": p**N}, unit_cases())

        def continuity_cases(p=p, N=N):
            for k in (1, 2):
                classes: dict[int, PAdicInt] = {}
                for m, v in enumerate(values):
                    r = m % p**k
                    vk = v.truncate(k)
                    if r in classes:
                        yield ({"p": p, "k": k, "m": m}, classes[r] == vk,
                               vk - classes[r])
                    else:
                        classes[r] = vk
        col.run("gamma_p/continuity", {"p": p, "N": N, "k_max": 2},
                continuity_cases())

    # Beta as the multiplicative coboundary of Gamma, plus its cocycle law
    p, N = (cfg.p or 5), (cfg.precision or 3)
    gmap = cohomo.GroupValuedMap(gamma.gamma_p, cohomo.MULTIPLICATIVE, name="gamma_p")

    def beta_cases():
        for _ in range(cfg.count):
            a = sample_padic(p, N, rng)
            b = sample_padic(p, N, rng)
            c = sample_padic(p, N, rng)
            want = gamma.beta_p(a, b)
            got = cohomo.coboundary2(gmap, a, b)
            ok1 = want == got
            rep = cohomo.cocycle2_check(
                cohomo.GroupValuedMap(gamma.beta_p, cohomo.MULTIPLICATIVE,
                                      name="beta_p"), a, b, c)
            yield ({"p": p, "N": N, "a": a, "b": b, "c": c},
                   ok1 and rep.passed, rep.residual)

    col.run("beta_p/coboundary_and_cocycle",
            {"p": p, "N": N, "triples": cfg.count, "seed": cfg.seed}, beta_cases())
    return records


# ---------------------------------------------------------------------------
# charsum suite

def run_charsum_suite(cfg: RunConfig) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    col = _Collector("charsum", records)
    ps = [cfg.p] if cfg.p else [5, 7]
    terms = cfg.terms

    for p in ps:
        N = cfg.precision or 3
        ring = pi_ring(p, N)
        one = ring.one()

        def gate_cases(p=p, N=N, ring=ring, one=one):
            psi1 = charsum.additive_character(1, p, N, terms)
            yield {"p": p, "gate": "psi(1) != 1"}, psi1 != one, psi1
            yield {"p": p, "gate": "psi(1)^p == 1"}, psi1**p == one, psi1**p
            total = ring.zero()
            for c in range(p):
                total = total + charsum.additive_character(c, p, N, terms)
            yield {"p": p, "gate": "sum psi == 0"}, total == ring.zero(), total
            for a in range(p):
                for b in range(p):
                    got = charsum.additive_character(a, p, N, terms) \
                        * charsum.additive_character(b, p, N, terms)
                    want = charsum.additive_character(a + b, p, N, terms)
                    yield {"p": p, "gate": "psi additive", "pair": [a, b]}, \
                        got == want, got - want

        col.run("additive_character/gates", {"p": p, "N": N}, gate_cases())

        def norm_cases(p=p, N=N, ring=ring):
            for a in range(1, p - 1):
                lhs = charsum.gauss_sum(a, p, N, terms) \
                    * charsum.gauss_sum(-a, p, N, terms)
                rhs = ring.from_int(p if a % 2 == 0 else -p)
                yield {"p": p, "a": a}, lhs == rhs, lhs - rhs

        col.run("gauss_sum/norm_relation", {"p": p, "N": N}, norm_cases())

        field = fq_make(p, 1)
        Ncob = max(N, 4)

        def coboundary_cases(p=p, field=field, Ncob=Ncob):
            d = p - 1
            for a in range(1, d):
                for b in range(1, d):
                    if (a + b) % d == 0:
                        continue
                    cob = charsum.gauss_coboundary(a, b, p, Ncob, terms)
                    jac = jacobi_sum(a, b, field, Ncob)
                    emb = pi_ring(p, Ncob).from_padic(jac.coeffs[0])
                    yield {"p": p, "a": a, "b": b}, cob == emb, cob - emb

        col.run("gauss_coboundary/equals_jacobi", {"p": p, "N": Ncob},
                coboundary_cases())

        def gk_cases(p=p, N=N):
            for a in range(1, p - 1):
                rep = charsum.gross_koblitz_check(a, p, N, terms)
                yield {"p": p, "a": a}, rep.passed, rep.lhs - rep.rhs

        col.run("gross_koblitz_check", {"p": p, "N": N}, gk_cases())

    def jacobi_norm_cases():
        for q in ([cfg.p] if cfg.p else [5, 7, 13]):
            field = charsum.field_for_order(q)
            N = 3
            d = q - 1
            for a in range(1, d):
                for b in range(1, d):
                    if (a + b) % d == 0:
                        continue
                    lhs = jacobi_sum(a, b, field, N) * jacobi_sum(-a, -b, field, N)
                    rhs = zq_ring(field, N).from_int(q)
                    yield {"q": q, "a": a, "b": b}, lhs == rhs, lhs - rhs

    col.run("jacobi_sum/norm_relation", {"q": cfg.p or [5, 7, 13]},
            jacobi_norm_cases())

    def fermat_cases():
        chosen = [(cfg.p, 2)] if cfg.p else \
            [(5, 2), (5, 4), (7, 2), (7, 3), (13, 3), (13, 4)]
        for q, m in chosen:
            brute = charsum.count_fermat_brute(q, m)
            viaj = charsum.count_fermat_jacobi(q, m)
            yield {"q": q, "m": m, "brute": brute, "jacobi": viaj}, \
                brute == viaj, viaj - brute

    col.run("count_fermat/jacobi_vs_brute", {}, fermat_cases())
    return records


SUITE_RUNNERS = {
    "carry": run_carry_suite,
    "buium": run_buium_suite,
    "gamma": run_gamma_suite,
    "charsum": run_charsum_suite,
}


def run_suites(cfg: RunConfig) -> list[CheckRecord]:
    if cfg.suite == "all":
        names = SUITE_NAMES
    elif cfg.suite in SUITE_RUNNERS:
        names = (cfg.suite,)
    else:
        raise ValueError(f"unknown suite {cfg.suite!r}")
    records: list[CheckRecord] = []
    for name in names:
        records.extend(SUITE_RUNNERS[name](cfg))
    return records
