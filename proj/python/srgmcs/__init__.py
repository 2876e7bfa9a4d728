"""Cuckoo Search parameter estimation for software reliability growth models."""

from ._core import (  # noqa: F401
    ConfigError,
    CsConfig,
    DomainError,
    Error,
    EvaluationFault,
    FailureDataset,
    FitOutcome,
    FitReport,
    ModelKind,
    Nest,
    ParamBounds,
    Params,
    ParseError,
    ValidationError,
    compare,
    default_bounds,
    emit,
    fit,
    generate,
    intensity,
    load,
    load_file,
    mean_value,
    parse_fit_report,
    references_for,
    rmse,
    run,
    run_model,
    split,
    split_study,
    train_full,
    validate,
)

__version__ = "0.1.0"
