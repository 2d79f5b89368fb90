"""Sampled verification suites over the model polytopes.

Each suite draws seeded exact-rational sample points, checks a family of
structural laws on every sample, and returns a report whose counterexample
list is empty exactly when the suite passes. The suites back the CLI
`verify theorems` task and the acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coordchange import from_prime_coords, simplex_image_check, to_prime_coords
from .halfspaces import kimura3_prime_system, kimura3_system
from .matrices import Matrix
from .rationals import is_integral
from .sampling import sample_box_points, sample_prime_points, sample_prime_segment_points
from .witness import (
    InteriorWitness,
    classify_facet,
    incidence_report,
    interior_witness,
    line_tight_subsets,
    parity_check,
    pseudo_facet_structure,
    s_facet_count_even,
)


@dataclass(frozen=True)
class IsomorphismSuiteReport:
    leaves: int
    roundtrip_checked: int
    membership_checked: int
    simplex_image_ok: bool
    failures: tuple
    passed: bool


@dataclass(frozen=True)
class PseudoFacetSuiteReport:
    leaves: int
    samples: int
    k_ge_omega: int
    single_nonintegral_rows: int
    structure: int
    parity: int
    mixed_class: int
    cycle_configs: int
    failures: tuple
    passed: bool


@dataclass(frozen=True)
class InteriorSuiteReport:
    leaves: int
    samples: int
    nonintegral: int
    failures: tuple
    passed: bool


def _mixed_sample(m, count, seed):
    head = 2 * count // 3
    return sample_prime_points(m, head, seed) + sample_prime_segment_points(
        m, count - head, seed + 1
    )


def run_isomorphism_suite(m: int, samples: int, seed: int = 0) -> IsomorphismSuiteReport:
    """Round-trip and membership invariance of the coordinate change."""
    failures = []
    boxes = sample_box_points(m, samples, seed)
    for p in boxes:
        if from_prime_coords(to_prime_coords(p)) != p:
            failures.append(("roundtrip_forward", p.entries))
        if to_prime_coords(from_prime_coords(p)) != p:
            failures.append(("roundtrip_backward", p.entries))
    sys_std = kimura3_system(m)
    sys_pri = kimura3_prime_system(m)
    membership_pool = sample_box_points(m, samples // 2, seed + 2) + _mixed_sample(
        m, samples - samples // 2, seed + 3
    )
    for p in membership_pool:
        inside_std = sys_std.membership(p).status != "outside"
        inside_pri = sys_pri.membership(to_prime_coords(p)).status != "outside"
        if inside_std != inside_pri:
            failures.append(("membership", p.entries))
    simplex_ok = simplex_image_check()
    if not simplex_ok:
        failures.append(("simplex_image", None))
    return IsomorphismSuiteReport(
        leaves=m,
        roundtrip_checked=len(boxes),
        membership_checked=len(membership_pool),
        simplex_image_ok=simplex_ok,
        failures=tuple(failures),
        passed=not failures,
    )


def run_pseudo_facet_suite(m: int, samples: int, seed: int = 0) -> PseudoFacetSuiteReport:
    """Structural laws of tight pseudo-facets on sampled member points.

    Checks, per sample: k >= omega; no row holds exactly one non-integral
    coordinate; two tight pseudo-facets cap a row at two non-integral
    coordinates; three force it integral with m tight; every tight
    pseudo-facet of a two-non-integral row obeys the S/O parity law and
    rows never mix the two classes; k == omega configurations are the two
    cycle patterns and carry an even number of S-lines.
    """
    failures = []
    counts = {
        "k_ge_omega": 0,
        "single": 0,
        "structure": 0,
        "parity": 0,
        "mixed": 0,
        "cycle": 0,
    }
    pts = _mixed_sample(m, samples, seed)
    for p in pts:
        rep = incidence_report(p)
        if rep.k < rep.omega:
            counts["k_ge_omega"] += 1
            failures.append(("k_lt_omega", p.entries))
        if any(c == 1 for c in rep.row_nonintegral):
            counts["single"] += 1
            failures.append(("single_nonintegral_row", p.entries))
        if not pseudo_facet_structure(p).passed:
            counts["structure"] += 1
            failures.append(("row_structure", p.entries))
        for r in (1, 2, 3):
            row = p.row(r)
            if sum(1 for v in row if not is_integral(v)) != 2:
                continue
            classes = set()
            for sub in line_tight_subsets(row):
                classes.add(classify_facet(row, sub))
                if not parity_check(row, sub):
                    counts["parity"] += 1
                    failures.append(("parity", (r, sub, p.entries)))
            if len(classes) > 1:
                counts["mixed"] += 1
                failures.append(("mixed_class", (r, p.entries)))
        if rep.k == rep.omega and rep.k > 0:
            counts["cycle"] += 1
            if rep.tag not in ("P1", "P2"):
                failures.append(("unrecognized_tight_configuration", p.entries))
            elif not s_facet_count_even(p):
                failures.append(("odd_s_count", p.entries))
    return PseudoFacetSuiteReport(
        leaves=m,
        samples=len(pts),
        k_ge_omega=counts["k_ge_omega"],
        single_nonintegral_rows=counts["single"],
        structure=counts["structure"],
        parity=counts["parity"],
        mixed_class=counts["mixed"],
        cycle_configs=counts["cycle"],
        failures=tuple(failures),
        passed=not failures,
    )


def run_interior_suite(m: int, samples: int, seed: int = 0) -> InteriorSuiteReport:
    """Segment-interior witnesses for every sampled non-integral member point.

    The witness direction must be nonzero, vanish on integral coordinates,
    and both endpoints p +- eps*v must pass the exact membership check.
    """
    sys_pri = kimura3_prime_system(m)
    failures = []
    nonintegral = 0
    pts = _mixed_sample(m, samples, seed)
    for p in pts:
        if p.is_integral():
            continue
        nonintegral += 1
        wit = interior_witness(p)
        if not isinstance(wit, InteriorWitness):
            failures.append(("not_interior", wit.reason, p.entries))
            continue
        v = wit.direction
        if all(x == 0 for x in v.flatten()):
            failures.append(("zero_direction", p.entries))
            continue
        if any(
            vx != 0
            for px, vx in zip(p.flatten(), v.flatten())
            if is_integral(px)
        ):
            failures.append(("direction_off_support", p.entries))
            continue
        if wit.epsilon <= 0:
            failures.append(("nonpositive_epsilon", p.entries))
            continue
        up = Matrix.from_flat(
            [px + wit.epsilon * vx for px, vx in zip(p.flatten(), v.flatten())], 3, p.ncols
        )
        down = Matrix.from_flat(
            [px - wit.epsilon * vx for px, vx in zip(p.flatten(), v.flatten())], 3, p.ncols
        )
        if sys_pri.membership(up).status == "outside":
            failures.append(("upper_endpoint_outside", p.entries))
        if sys_pri.membership(down).status == "outside":
            failures.append(("lower_endpoint_outside", p.entries))
    return InteriorSuiteReport(
        leaves=m,
        samples=len(pts),
        nonintegral=nonintegral,
        failures=tuple(failures),
        passed=not failures,
    )
