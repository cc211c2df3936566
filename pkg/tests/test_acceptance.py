"""One test per headline acceptance criterion; each prints a PASS/FAIL line with its timing."""
import time
from collections import Counter

import pytest

from ehclab import ellchains as ec
from ehclab.chartable import character_table
from ehclab.gencharacters import generic_table, match_tables
from ehclab.groups import materialise
from ehclab.instance import rank_one_instance
from ehclab.levi import enumerate_e_split_levis, gl_closed_form_levis, rederive
from ehclab.rootdatum import build_group, multiplicative_order_e
from ehclab.unipotent import (bfs_cores, e_core, e_quotient, from_core_quotient, partitions_of,
                              series_count_identity)
from ehclab.verify import EQUAL, SKIPPED, RunConfig, run


class Criterion:
    """Collects failures for one criterion and reports PASS/FAIL against a time budget."""

    def __init__(self, name, budget):
        self.name, self.budget, self.failures = name, budget, []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def expect(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc_type is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if self.budget is not None and elapsed > self.budget:
            self.failures.append(f"took {elapsed:.1f}s, budget {self.budget}s")
        verdict = "FAIL" if self.failures else "PASS"
        print(f"\n{verdict}: {self.name} ({elapsed:.2f}s)")
        for f in self.failures[:10]:
            print(f"  {f}")
        assert not self.failures, self.failures
        return False


def verdicts(report, suite):
    return [it["verdict"] for it in report["suites"][suite]["items"]]


def test_table_oracle():
    with Criterion("generic GL2/SL2 tables equal Dixon tables, q in {3,4,5}", None) as c:
        for gtype in ("GL", "SL"):
            for q in (3, 4, 5):
                t0 = time.perf_counter()
                m = match_tables(generic_table(gtype, q), character_table(materialise(gtype, 2, q)))
                c.expect(m is not None and m.sizes_agree, f"{gtype}2({q}) mismatch")
                c.expect(time.perf_counter() - t0 < 30, f"{gtype}2({q}) over 30s")


def test_levi_oracle():
    with Criterion("Weyl e-split Levi enumeration equals GL_n closed form, n<=5, e<=4", 5) as c:
        for n in range(1, 6):
            R, F, _ = build_group("GL", n, 2)
            for e in range(1, 5):
                got = Counter(L.label for L in enumerate_e_split_levis(R, F, e))
                c.expect(got == Counter(gl_closed_form_levis(n, e)), f"n={n} e={e}")


def test_theorem_a_instances():
    with Criterion("Brauer-Lusztig blocks are disjoint unions of e-HC series, GL2(5) and SL2(4), l=3", 120) as c:
        for gtype, q in (("GL", 5), ("SL", 4)):
            inst = rank_one_instance(gtype, q)
            e = multiplicative_order_e(q, 3)
            items = inst.verify_theorem_A(3, e)
            c.expect(items, f"{gtype}2({q}) no items")
            covered = set()
            for it in items:
                c.expect(it.ok and it.disjoint and it.union == it.members, f"{gtype}2({q}) {it.block.index}")
                covered |= it.members
            c.expect(covered == set(range(len(inst.characters))), f"{gtype}2({q}) not exhaustive")


def test_conjecture_a_identity():
    with Criterion("k^d(B) - k_c^d(B) equals the Levi chain sum, GL2(5) SL2(4) SL2(5) GL2(7), l=3", 300) as c:
        for gtype, q in (("GL", 5), ("SL", 4), ("SL", 5), ("GL", 7)):
            rep = run(RunConfig(gtype=gtype, n=2, q=q, ell=3, suites=("conjecture-a",)))
            v = verdicts(rep, "conjecture-a")
            c.expect(v and all(x == EQUAL for x in v), f"{gtype}2({q}): {Counter(v)}")


def test_dade_equivalence():
    with Criterion("Dade sum, good-chain sum and Levi sum agree with value 0, GL2(5) SL2(4), l=3", 300) as c:
        for gtype, q in (("GL", 5), ("SL", 4)):
            rep = run(RunConfig(gtype=gtype, n=2, q=q, ell=3, suites=("dade-equivalence",)))
            s = rep["suites"]["dade-equivalence"]
            info = s.get("info", {})
            c.expect(info.get("bijection_ok") and info.get("involution_ok"), f"{gtype}2({q}) {info}")
            compared = [it for it in s["items"] if it["verdict"] != SKIPPED]
            c.expect(compared, f"{gtype}2({q}) nothing compared")
            for it in compared:
                ok = (it["verdict"] == EQUAL and it["lhs"] == it["rhs"] == it["extra"]["good_sum"] == 0
                      and it["extra"]["term_for_term"])
                c.expect(ok, f"{gtype}2({q}) {it}")
            for it in s["items"]:
                if it["verdict"] == SKIPPED:
                    c.expect(it.get("reason"), f"{gtype}2({q}) skip without reason")


def test_am_identity():
    with Criterion("k(B) equals the sum of k(N_G(L), lambda) over CP_e(B), GL2(5) SL2(5), l=3", None) as c:
        for gtype, q in (("GL", 5), ("SL", 5)):
            rep = run(RunConfig(gtype=gtype, n=2, q=q, ell=3, suites=("am-identity",)))
            v = verdicts(rep, "am-identity")
            c.expect(v and all(x == EQUAL for x in v), f"{gtype}2({q}): {Counter(v)}")
            nblocks = len(rank_one_instance(gtype, q).block_data(3).blocks)
            c.expect(len(v) == nblocks, f"{gtype}2({q}) {len(v)} items for {nblocks} blocks")


def test_parametrisation_cardinality():
    with Criterion("|E(G,(L,lambda))| = |Irr(N_G(L)|lambda)| with matching defects, GL2(5) SL2(4), e in {1,2}", None) as c:
        for gtype, q in (("GL", 5), ("SL", 4)):
            inst = rank_one_instance(gtype, q)
            for e in (1, 2):
                rows = inst.parametrisation_cardinality_check(e)
                c.expect(rows, f"{gtype}2({q}) e={e} no pairs")
                for pair, nser, nloc, defects_ok, ell in rows:
                    c.expect(nser == nloc and defects_ok, f"{gtype}2({q}) e={e} l={ell} {pair}: {nser} vs {nloc}")


def test_unipotent_counting_identity():
    with Criterion("unipotent e-core fibres match e-multipartitions; abacus agrees with rim-hook oracle", 60) as c:
        for n in range(1, 11):
            for e in range(1, 5):
                for it in series_count_identity(n, e):
                    c.expect(it.ok, f"n={n} e={e} core={it.core}")
        for n in range(1, 13):
            for e in range(1, 6):
                for lam in partitions_of(n):
                    c.expect(bfs_cores(lam, e) == {e_core(lam, e)}, f"oracle {lam} e={e}")
                    cq = e_quotient(lam, e)
                    c.expect(from_core_quotient(cq.core, cq.quotient, e) == lam, f"round trip {lam} e={e}")


def test_structural_properties():
    with Criterion("structural properties: rederivation, connectedness, Omega_1 Levis, regularity, defect zero", None) as c:
        for gtype, n in [("GL", k) for k in range(1, 6)] + [("SL", k) for k in range(2, 5)]:
            R, F, _ = build_group(gtype, n, 3)
            for e in range(1, 5):
                for L in enumerate_e_split_levis(R, F, e):
                    c.expect(rederive(R, F, L), f"rederive {gtype}{n} e={e} {L.label}")
        c.expect(ec.centraliser_connected_check(rank_one_instance("GL", 4), 3) == [], "connectedness GL2(4)")
        for q in (4, 5):
            e = multiplicative_order_e(q, 3)
            c.expect(ec.levi_from_omega1_check(rank_one_instance("GL", q), 3, e) == [], f"Omega_1 GL2({q})")
        for gtype, q in (("GL", 4), ("GL", 5), ("SL", 4), ("SL", 5)):
            e = multiplicative_order_e(q, 3)
            items = ec.stabiliser_blocks_regular(rank_one_instance(gtype, q), 3, e)
            c.expect(items, f"regularity {gtype}2({q}) empty")
            for it in items:
                c.expect(it.covered and it.single_orbit and it.induces_back, f"regularity {gtype}2({q})")
        expected_hyp = {("GL", 5): True, ("SL", 4): True, ("SL", 5): True, ("GL", 4): False, ("GL", 7): False}
        for (gtype, q), want in expected_hyp.items():
            hyp, bad = ec.cuspidal_defect_zero_check(rank_one_instance(gtype, q), 3)
            c.expect(hyp == want, f"hypothesis status {gtype}2({q}) = {hyp}")
            if hyp:
                c.expect(bad == [], f"defect zero {gtype}2({q}): {bad}")
