"""Exact orientifold T-duality for circle bundles.

Twisted cellular cohomology with local coefficients, T-dual backgrounds, the
KR spectral sequence for free involutions, and the conformal Courant
algebroid identity suite, all in exact arithmetic.
"""

from tdual._core import (  # noqa: F401
    AbelianGroup,
    DeltaComplex,
    catalog,
    cohomology,
    cohomology_group,
    doc_cohomology,
    doc_kr,
    doc_tdual,
    doc_transform,
    invariant_twisted_cohomology,
    kr,
    run_axioms,
    smith_normal_form,
    twisted_coboundary,
)

__all__ = [
    "AbelianGroup",
    "DeltaComplex",
    "catalog",
    "cohomology",
    "cohomology_group",
    "doc_cohomology",
    "doc_kr",
    "doc_tdual",
    "doc_transform",
    "invariant_twisted_cohomology",
    "kr",
    "run_axioms",
    "smith_normal_form",
    "twisted_coboundary",
]
