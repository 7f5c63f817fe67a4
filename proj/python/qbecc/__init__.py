"""Quantum burst-error-correcting stabilizer codes."""

from ._core import (
    CommutationError,
    DecoderTable,
    Interleaver,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    StabilizerCode,
    __version__,
    additive_code,
    analyze,
    build_code,
    build_decoder,
    entanglement_fidelity,
    error_prob,
    interleaved_code,
    located_burst_check,
    min_distance,
    no_cloning_check,
    parse_grid,
    qrb,
    qtpc,
    registry,
    registry_code,
    run_cli,
    search,
)
