try:
    from ._dutchdraw import (
        baseline,
        dd_sample,
        expected_group_score,
        hypergeom_pmf,
        measures,
        theta_to_j,
        verify_theorem,
    )
except ImportError:  # in-tree builds put the module on sys.path directly
    from _dutchdraw import (
        baseline,
        dd_sample,
        expected_group_score,
        hypergeom_pmf,
        measures,
        theta_to_j,
        verify_theorem,
    )

__all__ = [
    "baseline",
    "dd_sample",
    "expected_group_score",
    "hypergeom_pmf",
    "measures",
    "theta_to_j",
    "verify_theorem",
]
