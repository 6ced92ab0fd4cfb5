"""JSON map documents, report writers and CSV curve input."""
from .map_document import (
    DOCUMENT_VERSION,
    document_to_spec,
    dump_map_spec,
    dumps_canonical,
    load_map_spec,
    pair,
    parse_pair,
    spec_to_document,
)
from .reports import distribution_to_dict, read_curve_csv, write_csv, write_json

__all__ = [
    "DOCUMENT_VERSION",
    "pair",
    "parse_pair",
    "spec_to_document",
    "document_to_spec",
    "dumps_canonical",
    "load_map_spec",
    "dump_map_spec",
    "distribution_to_dict",
    "write_json",
    "write_csv",
    "read_curve_csv",
]
