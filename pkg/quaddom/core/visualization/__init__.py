"""SVG figures of traced boundaries and family sweeps."""
from .figures import member_label, plot_boundaries, plot_family

__all__ = ["member_label", "plot_boundaries", "plot_family"]
