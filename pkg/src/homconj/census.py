"""Exhaustive sweeps comparing the criteria against the brute-force oracle.

Every sweep takes one sigma per cycle type, because all decisions are
equivariant under simultaneous conjugation.  The second homomorphism of each
pair is relabelled by the point reversal i -> n+1-i so that the alignment
step of the criteria is exercised on every instance.
"""
from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache

from .abelian import (
    AbelianHom,
    are_conjugate_abelian,
    are_element_conjugate_abelian,
    cent_signature,
    element_conjugacy_criterion,
    element_types,
    local_element_conjugacy,
    signature_difference,
)
from .centralizer import (
    DEFAULT_CAP,
    centralizer_order,
    enumerate_centralizer,
    sigma_decompose,
)
from .dihedral import (
    DihedralHom,
    are_conjugate_dihedral,
    are_element_conjugate_dihedral,
    block_reflection,
    h_conjugate_involutions_block,
    local_element_conjugacy_dihedral,
)
from .oracle import (
    cent_orbit,
    conjugation_orbit,
    enumerate_commuting_elements,
    enumerate_inverting_involutions,
    find_hom_conjugator,
    inplace_inversions,
    orbits_under_rotation,
    swap_inversions,
)
from .perm import (
    Permutation,
    conjugate_by,
    cycle_type,
    order_of,
    partitions,
    permutation_of_type,
    power,
)

HOM_LEVEL_LIMIT = 6
BLOCK_LEVEL_LIMIT = 8
MAX_EXAMPLES = 20


@dataclass
class Audit:
    """A filtered property: every checked instance must hold."""

    description: str
    checked: int = 0
    counterexamples: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, example=None) -> None:
        self.checked += 1
        if not ok:
            self.counterexamples += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(example() if callable(example) else example)

    def to_dict(self) -> dict:
        return {"description": self.description, "checked": self.checked,
                "counterexamples": self.counterexamples, "examples": self.examples}


@dataclass
class CensusReport:
    parameters: dict
    instances_total: int = 0
    agreements: int = 0
    mismatches: list = field(default_factory=list)
    audits: dict = field(default_factory=dict)
    groups: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def record(self, theorem: bool, oracle: bool, mismatch) -> None:
        self.instances_total += 1
        if theorem == oracle:
            self.agreements += 1
        else:
            self.mismatches.append(mismatch())

    @property
    def passed(self) -> bool:
        return not self.mismatches and all(a.counterexamples == 0 for a in self.audits.values())

    @contextmanager
    def phase(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + time.perf_counter() - t0

    def to_dict(self, include_timings: bool = True) -> dict:
        return {
            "parameters": self.parameters,
            "totals": {
                "instances_total": self.instances_total,
                "agreements": self.agreements,
                "mismatches": len(self.mismatches),
                "audit_counterexamples": sum(a.counterexamples for a in self.audits.values()),
            },
            "mismatches": self.mismatches,
            "audits": {k: a.to_dict() for k, a in self.audits.items()},
            "groups": self.groups,
            "timings": {k: round(v, 6) for k, v in self.timings.items()} if include_timings else {},
        }

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True) + "\n"

    def mismatch_csv(self) -> str:
        buf = io.StringIO()
        cols = ["sigma", "phi", "psi", "theorem_verdict", "oracle_verdict", "failed_condition"]
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for m in self.mismatches:
            row = {c: m.get(c) for c in cols}
            row["phi"] = " ".join(m.get("phi", []))
            row["psi"] = " ".join(m.get("psi", []))
            writer.writerow(row)
        return buf.getvalue()


def reversal(n: int) -> Permutation:
    return Permutation(range(n, 0, -1), check=False)


def sigma_representatives(n: int):
    for lengths in partitions(n):
        yield permutation_of_type(lengths)


def uniform_blocks(kd_max: int):
    """(d, k) with d >= 2 and k*d <= kd_max, as fixed-point-free sigmas."""
    for d in range(2, kd_max + 1):
        for k in range(1, kd_max // d + 1):
            yield d, k, permutation_of_type([d] * k)


def _group(sigma: Permutation, **extra) -> dict:
    return {"sigma": str(sigma), "degree": sigma.degree, "cycle_type": list(cycle_type(sigma)),
            "instances": 0, "agreements": 0, **extra}


def census_abelian(n_max: int, mode: str = "hom-level", cap: int = DEFAULT_CAP,
                   max_pairs: int | None = 20_000, seed: int = 0) -> CensusReport:
    """Audit the abelian criteria.

    ``block-level`` sweeps uniform sigmas with kd <= n_max over all ordered
    pairs of centralizer elements.  ``hom-level`` sweeps every sigma type
    up to degree n_max over all ordered pairs of commuting partners; when a
    sigma has more than ``max_pairs`` pairs a seeded sample is taken.
    """
    if mode == "block-level":
        if n_max > BLOCK_LEVEL_LIMIT:
            raise ValueError(f"block-level census is limited to kd <= {BLOCK_LEVEL_LIMIT}")
        return _abelian_block_level(n_max, cap)
    if mode == "hom-level":
        if n_max > HOM_LEVEL_LIMIT:
            raise ValueError(f"hom-level census is limited to n <= {HOM_LEVEL_LIMIT}")
        return _abelian_hom_level(n_max, cap, max_pairs, seed)
    raise ValueError(f"unknown mode {mode!r}")


def _abelian_block_level(kd_max: int, cap: int) -> CensusReport:
    report = CensusReport({"family": "abelian", "mode": "block-level", "n_max": kd_max, "cap": cap})
    audits = report.audits
    audits["element_conjugacy_lemma"] = Audit(
        "equal-type pairs: exponent/residue test <=> brute-force element-conjugacy of (sigma, pi)")
    audits["relprimecor"] = Audit("gcd(order pi, d) = 1 and equal S_n type => Cent-conjugate")
    audits["transpocase"] = Audit("d = 2, equal S_n type and equal bar type => Cent-conjugate")
    audits["orbit_stabilizer"] = Audit("|Cent-orbit| divides |Cent(sigma)|")

    for d, k, sigma in uniform_blocks(kd_max):
        dec = sigma_decompose(sigma)
        block = dec.blocks[0]
        group = _group(sigma, d=d, k=k)
        with report.phase("enumerate"):
            elems = list(enumerate_centralizer(dec, cap))
        with report.phase("theorem"):
            sigs = {p: cent_signature(block, p) for p in elems}
        with report.phase("oracle"):
            orbits = {p: cent_orbit(dec, p, cap) for p in elems}
        order = centralizer_order(dec)
        for p, orb in orbits.items():
            audits["orbit_stabilizer"].record(order % len(orb) == 0,
                                              lambda: {"sigma": str(sigma), "pi": str(p)})
        types = {p: cycle_type(p) for p in elems}

        @lru_cache(maxsize=None)
        def profile(p: Permutation):
            return element_types(sigma, p, d, order_of(p))

        with report.phase("compare"):
            for q in elems:
                orbit_q = orbits[q]
                for p in elems:
                    theorem = sigs[p] == sigs[q]
                    oracle = p in orbit_q
                    group["instances"] += 1
                    group["agreements"] += theorem == oracle
                    report.record(theorem, oracle, lambda: {
                        "sigma": str(sigma), "phi": [str(sigma), str(p)],
                        "psi": [str(sigma), str(q)], "theorem_verdict": theorem,
                        "oracle_verdict": oracle,
                        "failed_condition": signature_difference(sigs[p], sigs[q])})
                    if types[p] != types[q]:
                        continue
                    ex = {"sigma": str(sigma), "pi": str(p), "pi_prime": str(q)}
                    crit = element_conjugacy_criterion(dec, p, q)
                    audits["element_conjugacy_lemma"].record(crit == (profile(p) == profile(q)), ex)
                    if math.gcd(order_of(p), d) == 1:
                        audits["relprimecor"].record(theorem and oracle, ex)
                    if d == 2 and sigs[p].bar_type == sigs[q].bar_type:
                        audits["transpocase"].record(theorem and oracle, ex)
        report.groups.append(group)
    return report


def _abelian_hom_level(n_max: int, cap: int, max_pairs: int | None, seed: int) -> CensusReport:
    report = CensusReport({"family": "abelian", "mode": "hom-level", "n_max": n_max, "cap": cap,
                           "max_pairs": max_pairs, "seed": seed})
    local = report.audits["localglobalabelian"] = Audit(
        "conjugate <=> element-conjugate on Fix(sigma) and on every block")
    refine = report.audits["conjugacy_refines_element_conjugacy"] = Audit(
        "conjugate => element-conjugate")
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        g = reversal(n)
        for sigma in sigma_representatives(n):
            with report.phase("enumerate"):
                partners = list(enumerate_commuting_elements(sigma, cap))
            pairs = [(b, c) for b in partners for c in partners]
            sampled = max_pairs is not None and len(pairs) > max_pairs
            if sampled:
                pairs = rng.sample(pairs, max_pairs)
            group = _group(sigma, sampled=sampled)
            psi_a = conjugate_by(g, sigma)
            for b, c in pairs:
                phi = AbelianHom(sigma, b)
                psi = AbelianHom(psi_a, conjugate_by(g, c))
                with report.phase("theorem"):
                    decision = are_conjugate_abelian(phi, psi)
                with report.phase("oracle"):
                    oracle = find_hom_conjugator(phi.generators(), psi.generators(), cap) is not None
                theorem = decision.verdict
                group["instances"] += 1
                group["agreements"] += theorem == oracle
                report.record(theorem, oracle, lambda: {
                    "sigma": str(sigma), "phi": [str(x) for x in phi.generators()],
                    "psi": [str(x) for x in psi.generators()], "theorem_verdict": theorem,
                    "oracle_verdict": oracle, "failed_condition": decision.failed_condition})
                ex = {"phi": [str(x) for x in phi.generators()],
                      "psi": [str(x) for x in psi.generators()]}
                with report.phase("audits"):
                    if decision.failed_condition != "generator-types":
                        parts = local_element_conjugacy(phi, psi)
                        local.record(all(ok for _, ok in parts) == oracle, ex)
                    if oracle:
                        refine.record(are_element_conjugate_abelian(phi, psi), ex)
            report.groups.append(group)
    return report


def census_dihedral(n_max: int, m_max: int = 6, mode: str = "hom-level",
                    cap: int = DEFAULT_CAP) -> CensusReport:
    """Audit the dihedral criteria.

    ``hom-level`` sweeps every sigma type up to degree n_max, every m <= m_max
    with sigma^m = 1 and all ordered pairs of sigma-inverting involutions.
    ``block-level`` sweeps uniform sigmas with kd <= n_max and also runs the
    single-cycle reflection audits.
    """
    if mode == "block-level":
        if n_max > BLOCK_LEVEL_LIMIT:
            raise ValueError(f"block-level census is limited to kd <= {BLOCK_LEVEL_LIMIT}")
        return _dihedral_block_level(n_max, cap)
    if mode == "hom-level":
        if n_max > HOM_LEVEL_LIMIT:
            raise ValueError(f"hom-level census is limited to n <= {HOM_LEVEL_LIMIT}")
        return _dihedral_hom_level(n_max, m_max, cap)
    raise ValueError(f"unknown mode {mode!r}")


def _dihedral_block_level(kd_max: int, cap: int) -> CensusReport:
    report = CensusReport({"family": "dihedral", "mode": "block-level", "n_max": kd_max, "cap": cap})
    odd = report.audits["odddihedral"] = Audit("odd d and equal S_n type => Cent-conjugate")
    for d, k, sigma in uniform_blocks(kd_max):
        dec = sigma_decompose(sigma)
        block = dec.blocks[0]
        group = _group(sigma, d=d, k=k)
        with report.phase("enumerate"):
            invs = list(enumerate_inverting_involutions(sigma, cap))
        with report.phase("oracle"):
            orbits = {s: conjugation_orbit(sigma, s, cap) for s in invs}
        with report.phase("compare"):
            for q in invs:
                for p in invs:
                    theorem = h_conjugate_involutions_block(block, p, q)
                    oracle = p in orbits[q]
                    group["instances"] += 1
                    group["agreements"] += theorem == oracle
                    report.record(theorem, oracle, lambda: {
                        "sigma": str(sigma), "phi": [str(sigma), str(p)],
                        "psi": [str(sigma), str(q)], "theorem_verdict": theorem,
                        "oracle_verdict": oracle, "failed_condition": _reflection_difference(
                            block_reflection(block, p), block_reflection(block, q))})
                    if d % 2 == 1 and cycle_type(p) == cycle_type(q):
                        odd.record(theorem and oracle,
                                   {"sigma": str(sigma), "pi": str(p), "pi_prime": str(q)})
        report.groups.append(group)
    with report.phase("reflection_lemmas"):
        report.audits.update(reflection_lemma_audits())
    return report


def _reflection_difference(r1, r2) -> str:
    if r1.inverted_in_place != r2.inverted_in_place:
        return "bar-type"
    if r1.block_cycle_type != r2.block_cycle_type:
        return "block-type"
    return "none"


def reflection_lemma_audits(swap_d_max: int = 8, inplace_d_max: int = 9) -> dict[str, Audit]:
    """Single-cycle reflection counts and rotation orbits, by brute force."""
    swap = Audit("two disjoint d-cycles: exactly d involutions send tau1 to tau2^-1, one <tau2>-orbit")
    for d in range(2, swap_d_max + 1):
        found = swap_inversions(d)
        tau2 = Permutation.from_cycles([range(d + 1, 2 * d + 1)], 2 * d)
        orbits = orbits_under_rotation(tau2, found)
        swap.record(len(found) == d and len(orbits) == 1,
                    {"d": d, "count": len(found), "orbits": len(orbits)})
    inplace = Audit("one d-cycle: exactly d inverting involutions; one <tau>-orbit for odd d, "
                    "two of size d/2 for even d")
    for d in range(2, inplace_d_max + 1):
        found = inplace_inversions(d)
        tau = Permutation.from_cycles([range(1, d + 1)], d)
        orbits = orbits_under_rotation(tau, found)
        sizes = sorted(len(o) for o in orbits)
        want = [d] if d % 2 else [d // 2, d // 2]
        inplace.record(len(found) == d and sizes == want,
                       {"d": d, "count": len(found), "orbit_sizes": sizes})
    return {"dihed1": swap, "dihed2": inplace}


def _dihedral_hom_level(n_max: int, m_max: int, cap: int) -> CensusReport:
    report = CensusReport({"family": "dihedral", "mode": "hom-level", "n_max": n_max,
                           "m_max": m_max, "cap": cap})
    local = report.audits["localglobaldihedral"] = Audit(
        "conjugate <=> element-conjugate on Fix(sigma) and on every block")
    refine = report.audits["conjugacy_refines_element_conjugacy"] = Audit(
        "conjugate => element-conjugate")
    for n in range(1, n_max + 1):
        g = reversal(n)
        for sigma in sigma_representatives(n):
            with report.phase("enumerate"):
                invs = list(enumerate_inverting_involutions(sigma, cap))
            psi_r = conjugate_by(g, sigma)
            for m in range(1, m_max + 1):
                if not power(sigma, m).is_identity():
                    continue
                group = _group(sigma, m=m)
                for p in invs:
                    for q in invs:
                        phi = DihedralHom(m, sigma, p)
                        psi = DihedralHom(m, psi_r, conjugate_by(g, q))
                        with report.phase("theorem"):
                            decision = are_conjugate_dihedral(phi, psi)
                        with report.phase("oracle"):
                            oracle = find_hom_conjugator(
                                phi.generators(), psi.generators(), cap) is not None
                        theorem = decision.verdict
                        group["instances"] += 1
                        group["agreements"] += theorem == oracle
                        report.record(theorem, oracle, lambda: {
                            "sigma": str(sigma), "m": m,
                            "phi": [str(x) for x in phi.generators()],
                            "psi": [str(x) for x in psi.generators()],
                            "theorem_verdict": theorem, "oracle_verdict": oracle,
                            "failed_condition": decision.failed_condition})
                        ex = {"m": m, "phi": [str(x) for x in phi.generators()],
                              "psi": [str(x) for x in psi.generators()]}
                        with report.phase("audits"):
                            if oracle:
                                refine.record(are_element_conjugate_dihedral(phi, psi), ex)
                            if decision.failed_condition != "generator-types":
                                parts = local_element_conjugacy_dihedral(phi, psi)
                                local.record(all(ok for _, ok in parts) == oracle, ex)
                report.groups.append(group)
    return report
