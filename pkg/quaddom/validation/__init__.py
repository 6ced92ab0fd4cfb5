from .metrics import absolute_gap, gap_metric, relative_gap

__all__ = ['absolute_gap', 'relative_gap', 'gap_metric']
