"""Field of a two-layer density contrast across a contact curve."""
from .field import (
    ContactConfig,
    ContactRecord,
    ContactReport,
    CrossMemberReport,
    contact_equivalence_report,
    contact_field_boundary,
    contact_field_residue,
    cross_member_deviation,
)

__all__ = [
    "ContactConfig",
    "contact_field_boundary",
    "contact_field_residue",
    "ContactRecord",
    "ContactReport",
    "contact_equivalence_report",
    "CrossMemberReport",
    "cross_member_deviation",
]
