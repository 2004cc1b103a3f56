"""Exception types shared across the toolkit."""


class PhishkitError(Exception):
    """Base class for all toolkit errors."""


class DataError(PhishkitError):
    """Raised for malformed input data: bad CSV cells, unknown labels,
    missing columns, empty datasets."""


class ModelFormatError(PhishkitError):
    """Raised when a saved model file cannot be parsed or validated."""
