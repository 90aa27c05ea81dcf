from ._core import (
    Model,
    TfidfModel,
    TweetsentError,
    assign_label,
    classification_report,
    clean_text,
    fit,
    fit_tfidf,
    idf_weight,
    loads,
    polarity_score,
    preprocess,
    roc_curve,
    run_subcommand,
    stem,
    subcommands,
    tokenize,
)

__all__ = [
    "Model",
    "TfidfModel",
    "TweetsentError",
    "assign_label",
    "classification_report",
    "clean_text",
    "fit",
    "fit_tfidf",
    "idf_weight",
    "loads",
    "polarity_score",
    "preprocess",
    "roc_curve",
    "run_subcommand",
    "stem",
    "subcommands",
    "tokenize",
]
