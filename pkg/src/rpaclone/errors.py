"""Exception hierarchy for the rpaclone pipeline."""


class RpaCloneError(Exception):
    """Base class for operational errors (exit code 1 territory)."""


class XamlParseError(RpaCloneError):
    """A workflow file is not well-formed XML."""

    def __init__(self, message: str, byte_offset: int | None = None):
        super().__init__(message)
        self.byte_offset = byte_offset


class SchemaError(RpaCloneError):
    """Tabular input is missing a mapped column or has a malformed row."""


class EmptyCorpusError(RpaCloneError):
    """No usable process could be extracted from the given input."""


class DictionaryError(RpaCloneError):
    """A dictionary file failed to parse or violated an invariant."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
