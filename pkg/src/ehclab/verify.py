"""Verification suites and report assembly.

Every suite returns a SuiteReport whose items carry {block, defect, lhs, rhs, verdict, reason}.
Count identities use EQUAL / UNEQUAL, structural checks PASS / FAIL, and anything that
cannot be evaluated is SKIPPED with a reason.
"""
from __future__ import annotations

import csv
import io
import json
import platform
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import sympy

from .errors import ConfigError, EhcError, EllDividesQ, HypothesisViolated, UnsupportedType
from .exact import ell_valuation
from .fields import prime_power
from .instance import rank_one_instance
from .levi import enumerate_chains, enumerate_e_split_levis, gl_closed_form_levis, rederive
from .rootdatum import build_group, classify_prime, hypothesis_3_3_check, multiplicative_order_e
from . import ellchains as ec
from . import unipotent as up

SUITES = ("levis", "chains", "tables", "blocks", "theorem-a", "conjecture-a",
          "conjecture-b-count", "dade-equivalence", "am-identity", "unipotent")

EQUAL, UNEQUAL, SKIPPED, PASS, FAIL = "EQUAL", "UNEQUAL", "SKIPPED", "PASS", "FAIL"
GOOD_VERDICTS = (EQUAL, PASS)


@dataclass
class ReportItem:
    block: str
    defect: int | None
    lhs: object
    rhs: object
    verdict: str
    reason: str | None = None
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = {"block": self.block, "defect": self.defect, "lhs": self.lhs, "rhs": self.rhs,
             "verdict": self.verdict}
        if self.reason is not None:
            d["reason"] = self.reason
        if self.extra:
            d["extra"] = self.extra
        return d


def compare(block, d, lhs, rhs, **extra) -> ReportItem:
    return ReportItem(block, d, lhs, rhs, EQUAL if lhs == rhs else UNEQUAL, extra=extra)


def check(block, d, ok: bool, lhs=None, rhs=None, reason=None, **extra) -> ReportItem:
    return ReportItem(block, d, lhs, rhs, PASS if ok else FAIL, reason, extra)


@dataclass
class SuiteReport:
    name: str
    items: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def failed(self) -> list:
        return [it for it in self.items if it.verdict not in GOOD_VERDICTS + (SKIPPED,)]

    def as_dict(self) -> dict:
        d = {"items": [it.as_dict() for it in self.items]}
        if self.info:
            d["info"] = self.info
        return d


@dataclass
class RunConfig:
    gtype: str = "GL"
    n: int = 2
    q: int = 5
    ell: int | None = None
    e: int | None = None
    suites: tuple = ()
    out: str | None = None
    csv: str | None = None
    verbosity: int = 0
    parallel: bool = False
    max_chain_len: int = 8

    def validate(self) -> "RunConfig":
        self.gtype = str(self.gtype).upper()
        if self.gtype not in ("GL", "SL"):
            raise ConfigError(f"unsupported group type {self.gtype}")
        if self.n < 1:
            raise ConfigError("n must be positive")
        try:
            p, _ = prime_power(self.q)
        except (ValueError, EhcError) as exc:
            raise ConfigError(f"q = {self.q} is not a prime power") from exc
        if self.ell is None:
            raise ConfigError("ell is required")
        if not sympy.isprime(self.ell):
            raise ConfigError(f"ell = {self.ell} is not prime")
        if self.ell == p:
            raise ConfigError(f"ell = {self.ell} equals the characteristic")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ConfigError(f"unknown suite(s): {', '.join(bad)}")
        if self.e is None:
            self.e = multiplicative_order_e(self.q, self.ell)
        if self.e < 1:
            raise ConfigError("e must be positive")
        return self

    @property
    def instance_dict(self) -> dict:
        return {"type": self.gtype, "n": self.n, "q": self.q, "ell": self.ell, "e": self.e}


# ------------------------------------------------------------- helpers


def _blabel(B) -> str:
    return f"B{B.index}"


def _skip_all(name, reason) -> SuiteReport:
    return SuiteReport(name, [ReportItem("*", None, None, None, SKIPPED, reason)])


def _rank_one(cfg: RunConfig):
    if cfg.n != 2:
        raise UnsupportedType(f"concrete computations are implemented for n = 2 only (n = {cfg.n})")
    return rank_one_instance(cfg.gtype, cfg.q)


def _prime_info(cfg: RunConfig) -> dict:
    R, F, _ = build_group(cfg.gtype, cfg.n, cfg.q)
    pc = classify_prime(R, F, cfg.ell)
    ok, reasons = hypothesis_3_3_check(R, F, cfg.ell)
    return {"large": pc.large, "e0": pc.e0, "in_gamma": pc.in_gamma,
            "hypothesis_3_3": ok, "hypothesis_3_3_failures": reasons}


def _k_d(inst, B, d, ell) -> int:
    bd = inst.block_data(ell)
    return sum(1 for i in B.members if bd.defect(i) == d)


def _k_c_d(inst, B, d, ell, e) -> int:
    bd = inst.block_data(ell)
    gen = inst.match.generic_of
    return sum(1 for i in B.members if bd.defect(i) == d and inst.e_cuspidal_test(gen[i], e))


def _chain_name(sigma) -> str:
    return " > ".join(sigma)


# ---------------------------------------------------------------- suites


def run_levis(cfg: RunConfig) -> SuiteReport:
    R, F, _ = build_group(cfg.gtype, cfg.n, cfg.q)
    levis = enumerate_e_split_levis(R, F, cfg.e)
    rep = SuiteReport("levis")
    for L in levis:
        rep.items.append(check(L.label, None, rederive(R, F, L), lhs=L.order(cfg.q),
                               relative_weyl_order=L.relative_weyl_order))
    if cfg.gtype == "GL":
        got = sorted(L.label for L in levis)
        want = gl_closed_form_levis(cfg.n, cfg.e)
        rep.items.append(compare("closed-form", None, got, want))
    rep.info["count"] = len(levis)
    return rep


def run_chains(cfg: RunConfig) -> SuiteReport:
    R, F, _ = build_group(cfg.gtype, cfg.n, cfg.q)
    enum = enumerate_chains(R, F, cfg.e, cfg.max_chain_len)
    rep = SuiteReport("chains")
    for c in enum.chains:
        rep.items.append(check(str(c), None, True, lhs=c.stabiliser_order, length=c.length))
    rep.info["levi_chain_orbits"] = enum.stats.n_orbits
    rep.info["levi_chains_total"] = enum.stats.total_chains
    if cfg.n == 2:
        inst = _rank_one(cfg)
        ctx = ec.RankOneContext(inst)
        chains = ec.enumerate_ell_elementary_chains(inst.G, cfg.ell, max_len=cfg.max_chain_len)
        for c in chains:
            good = ec.classify_good_bad(c, ctx, cfg.ell)
            rep.items.append(check(f"ell-chain {c}", None, True, lhs=c.stabiliser.order,
                                   good=good, orbit_size=c.orbit_size, length=c.length))
    return rep


def run_tables(cfg: RunConfig) -> SuiteReport:
    inst = _rank_one(cfg)
    ok = inst.match is not None and inst.match.sizes_agree
    rep = SuiteReport("tables")
    rep.items.append(check(inst.name, None, ok, lhs=len(inst.generic.characters), rhs=len(inst.table)))
    return rep


def run_blocks(cfg: RunConfig) -> SuiteReport:
    inst = _rank_one(cfg)
    bd = inst.block_data(cfg.ell)
    rep = SuiteReport("blocks")
    for B in bd.blocks:
        for d in range(B.defect + 1):
            k = _k_d(inst, B, d, cfg.ell)
            if k:
                rep.items.append(check(_blabel(B), d, True, lhs=k, block_defect=B.defect,
                                       members=[inst.label(inst.match.generic_of[i]) for i in B.members
                                                if bd.defect(i) == d]))
    rep.info["block_count"] = len(bd.blocks)
    return rep


def run_theorem_a(cfg: RunConfig) -> SuiteReport:
    inst = _rank_one(cfg)
    rep = SuiteReport("theorem-a")
    rep.info.update(_prime_info(cfg))
    for it in inst.verify_theorem_A(cfg.ell, cfg.e):
        rep.items.append(check(_blabel(it.block), it.block.defect, it.ok,
                               lhs=sorted(inst.label(i) for i in it.members),
                               rhs=sorted(inst.label(i) for i in it.union),
                               series=str(it.series), disjoint=it.disjoint,
                               pairs=[str(p) for p in it.cuspidal_pairs]))
    return rep


def _proper_chains(inst, e):
    return ec.levi_chains(inst, e)[1:]


def run_conjecture_A(cfg: RunConfig) -> SuiteReport:
    """k^d(B) - k_c^d(B) against the alternating sum over nontrivial e-split Levi chains."""
    inst = _rank_one(cfg)
    ell, e = cfg.ell, cfg.e
    rep = SuiteReport("conjecture-a")
    rep.info.update(_prime_info(cfg))
    counts = ec.StabiliserCounts(inst.G, ell)
    chains = _proper_chains(inst, e)
    stabs = {sigma: ec.levi_chain_stabiliser(inst, sigma) for sigma in chains}
    undefined = {sigma: counts.undefined(H) for sigma, H in stabs.items()}
    for B in inst.block_data(ell).blocks:
        for d in range(B.defect + 1):
            lhs = _k_d(inst, B, d, ell) - _k_c_d(inst, B, d, ell, e)
            terms = {_chain_name(s): counts.k(H, B, d) for s, H in stabs.items()}
            rhs = sum((-1) ** len(s) * counts.k(H, B, d) for s, H in stabs.items())
            bad = [_chain_name(s) for s, u in undefined.items() if u]
            if bad:
                rep.items.append(ReportItem(_blabel(B), d, lhs, rhs, SKIPPED,
                                            "Brauer induction undefined from " + ", ".join(bad)))
                continue
            rep.items.append(compare(_blabel(B), d, lhs, rhs, k=_k_d(inst, B, d, ell),
                                     k_c=_k_c_d(inst, B, d, ell, e), chain_terms=terms))
    return rep


def _cp_proper(inst, B, ell, e) -> list:
    """CP_e(B)_<: e-cuspidal pairs with a proper Levi whose induced block is B."""
    out = []
    for p in inst.e_cuspidal_pairs(e):
        if p.levi == "G":
            continue
        ind = inst.pair_block(p, ell)
        if ind and ind.index == B.index:
            out.append(p)
    return out


def run_conjecture_B_count(cfg: RunConfig) -> SuiteReport:
    """Cardinalities of the quadruple sets CL^d(B)_+ and CL^d(B)_- per (B, d)."""
    inst = _rank_one(cfg)
    ell, e = cfg.ell, cfg.e
    rep = SuiteReport("conjecture-b-count")
    rep.info.update(_prime_info(cfg))
    rep.info["character_triples"] = "out of scope: only cardinalities are compared"
    counts = ec.StabiliserCounts(inst.G, ell)
    stabs = {s: ec.levi_chain_stabiliser(inst, s) for s in _proper_chains(inst, e)}
    for B in inst.block_data(ell).blocks:
        cp = _cp_proper(inst, B, ell, e)
        for d in range(B.defect + 1):
            if cp:
                plus = _k_d(inst, B, d, ell) - _k_c_d(inst, B, d, ell, e)
                minus = sum(counts.k(H, B, d) for H in stabs.values())
            else:
                plus = minus = 0
            rep.items.append(compare(_blabel(B), d, plus, minus, cuspidal_pairs=[str(p) for p in cp]))
    return rep


def run_dade_equivalence(cfg: RunConfig) -> SuiteReport:
    """Alternating sums over l-elementary chains, good chains and e-split Levi chains."""
    inst = _rank_one(cfg)
    ell, e = cfg.ell, cfg.e
    rep = SuiteReport("dade-equivalence")
    failed = ec.chain_comparison_hypotheses(inst, ell, e)
    rep.info["hypotheses_failed"] = failed
    if failed:
        rep.items.append(ReportItem("*", None, None, None, SKIPPED, "; ".join(failed)))
        return rep
    G = inst.G
    ctx = ec.RankOneContext(inst)
    chains = ec.enumerate_ell_elementary_chains(G, ell, max_len=cfg.max_chain_len)
    counts = ec.StabiliserCounts(G, ell)
    good = {c.terms: ec.classify_good_bad(c, ctx, ell) for c in chains}
    bij = ec.chain_levi_bijection(inst, ell, e)
    inv = ec.bad_chain_involution(chains, ctx, ell)
    by_terms = {c.terms: c for c in chains}
    bij_ok = all(b.inverse_ok and b.good and b.stabilisers_equal for b in bij)
    # every good chain class is hit exactly once by the bijection
    images = [ec.canonical_chain(G, b.ell_chain) for b in bij]
    bij_ok = bij_ok and sorted(images, key=ec._chain_key) == sorted(
        (t for t, g in good.items() if g), key=ec._chain_key)
    rep.info.update({"ell_chains": len(chains), "good_chains": sum(good.values()),
                     "levi_chains": len(bij), "bijection_ok": bij_ok, "involution_ok": inv.ok})
    o_val = ell_valuation(len(ec.o_ell(G, ell)), ell)
    for B in inst.block_data(ell).blocks:
        for d in range(B.defect + 1):
            if B.defect == o_val:
                rep.items.append(ReportItem(_blabel(B), d, None, None, SKIPPED,
                                            "defect group equals O_ell(G); the chain sums count the block itself"))
                continue
            kr = ec.knorr_robinson_sum(chains, counts, B, d)
            kr_good = ec.knorr_robinson_sum(chains, counts, B, d, only_good=lambda c: good[c.terms])
            levi_sum = sum((-1) ** (len(s) - 1) * counts.k(ec.levi_chain_stabiliser(inst, s), B, d)
                           for s in ec.levi_chains(inst, e))
            # term for term: good chains through the bijection, bad chains cancel in pairs
            terms_ok = all(counts.k(by_terms[ec.canonical_chain(G, b.ell_chain)].stabiliser, B, d)
                           == counts.k(ec.levi_chain_stabiliser(inst, b.levi_chain), B, d) for b in bij)
            for a, b in inv.pairing.items():
                if counts.k(by_terms[a].stabiliser, B, d) != counts.k(by_terms[b].stabiliser, B, d):
                    terms_ok = False
            agree = kr == kr_good == levi_sum and terms_ok and bij_ok and inv.ok
            rep.items.append(ReportItem(_blabel(B), d, kr, levi_sum, EQUAL if agree else UNEQUAL,
                                        extra={"good_sum": kr_good, "term_for_term": terms_ok}))
    return rep


def run_am_identity(cfg: RunConfig) -> SuiteReport:
    """k(B) against the sum of |Irr(N_G(L) | lambda)| over e-cuspidal pairs with induced block B."""
    inst = _rank_one(cfg)
    ell, e = cfg.ell, cfg.e
    rep = SuiteReport("am-identity")
    R, F, _ = build_group(cfg.gtype, 2, cfg.q)
    pc = classify_prime(R, F, ell)
    if not (pc.large and pc.e0 == e):
        reason = "ell is not large" if not pc.large else f"ell is not adapted: e0 = {pc.e0}"
        rep.items.append(ReportItem("*", None, None, None, SKIPPED, reason))
        return rep
    cusp = inst.e_cuspidal_pairs(e)
    where = {}
    for p in cusp:
        ind = inst.pair_block(p, ell)
        if not ind:
            rep.items.append(ReportItem(str(p), None, None, None, SKIPPED, ind.reason))
            return rep
        where.setdefault(ind.index, []).append(p)
    for B in inst.block_data(ell).blocks:
        pairs = where.get(B.index, [])
        rhs = sum(1 if p.levi == "G" else len(inst.normaliser_characters_over(p.levi, p.char))
                  for p in pairs)
        rep.items.append(compare(_blabel(B), B.defect, len(B.members), rhs, pairs=[str(p) for p in pairs]))
    return rep


def run_unipotent(cfg: RunConfig) -> SuiteReport:
    rep = SuiteReport("unipotent")
    if cfg.gtype != "GL":
        return _skip_all("unipotent", "unipotent combinatorics is implemented for GL_n")
    defects = None
    if cfg.ell != 2 and cfg.e == multiplicative_order_e(cfg.q, cfg.ell):
        defects = up.block_defects(cfg.n, cfg.q, cfg.ell)
    for it in up.series_count_identity(cfg.n, cfg.e):
        d = None
        extra = {"weight": it.weight}
        if defects is not None:
            ds = defects[it.core][1]
            d = max(ds)
            extra["member_defects"] = ds
        rep.items.append(compare(str(it.core), d, it.characters, it.multipartitions, **extra))
    return rep


RUNNERS = {
    "levis": run_levis,
    "chains": run_chains,
    "tables": run_tables,
    "blocks": run_blocks,
    "theorem-a": run_theorem_a,
    "conjecture-a": run_conjecture_A,
    "conjecture-b-count": run_conjecture_B_count,
    "dade-equivalence": run_dade_equivalence,
    "am-identity": run_am_identity,
    "unipotent": run_unipotent,
}


def run_suite(cfg: RunConfig, name: str) -> SuiteReport:
    try:
        return RUNNERS[name](cfg)
    except (UnsupportedType, HypothesisViolated, EllDividesQ) as exc:
        return _skip_all(name, str(exc))


def _suite_job(args):
    cfg, name = args
    return run_suite(cfg, name)


def run(cfg: RunConfig) -> dict:
    """Run the requested suites (all of them if none given) and return the report mapping."""
    cfg.validate()
    names = list(cfg.suites) or list(SUITES)
    if cfg.parallel and len(names) > 1:
        with ProcessPoolExecutor() as pool:
            reports = list(pool.map(_suite_job, [(cfg, n) for n in names]))
    else:
        reports = [run_suite(cfg, n) for n in names]
    return {
        "instance": cfg.instance_dict,
        "suites": {r.name: r.as_dict() for r in reports},
        "versions": versions(),
    }


def versions() -> dict:
    from . import __version__
    return {"ehclab": __version__, "sympy": sympy.__version__,
            "python": platform.python_version()}


def all_passed(report: dict) -> bool:
    return all(it["verdict"] in GOOD_VERDICTS + (SKIPPED,)
               for s in report["suites"].values() for it in s["items"])


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "block", "defect", "lhs", "rhs", "verdict", "reason"])
    for name, s in report["suites"].items():
        for it in s["items"]:
            w.writerow([name, it["block"], "" if it["defect"] is None else it["defect"],
                        "" if it["lhs"] is None else it["lhs"], "" if it["rhs"] is None else it["rhs"],
                        it["verdict"], it.get("reason", "")])
    return buf.getvalue()
