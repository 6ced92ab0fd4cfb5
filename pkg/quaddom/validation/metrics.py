"""Gap metrics shared by the quadrature-identity and contact-field reports."""

__all__ = ['absolute_gap', 'relative_gap', 'gap_metric', 'REFERENCE_FLOOR']

#: Below this magnitude the reference value is treated as zero and gaps are absolute
REFERENCE_FLOOR = 1e-12


def absolute_gap(reference, value):
    return float(abs(complex(value) - complex(reference)))


def relative_gap(reference, value):
    ref = abs(complex(reference))
    gap = absolute_gap(reference, value)
    if ref >= REFERENCE_FLOOR:
        return gap / ref
    return float('inf') if gap > 0 else 0.0


def gap_metric(reference, value):
    """Relative gap, or the absolute gap when the reference is (numerically) zero."""
    if abs(complex(reference)) < REFERENCE_FLOOR:
        return absolute_gap(reference, value)
    return relative_gap(reference, value)
