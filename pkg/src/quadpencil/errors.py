"""Exception hierarchy shared by every layer of the package."""


class QuadPencilError(Exception):
    """Base class; the CLI maps any subclass to exit code 1."""

    code = "error"

    def to_dict(self):
        return {"type": self.code, "message": str(self)}


class InvalidInput(QuadPencilError):
    code = "invalid_input"

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location

    def to_dict(self):
        d = super().to_dict()
        if self.location is not None:
            d["location"] = self.location
        return d


class DegenerateForm(QuadPencilError):
    code = "degenerate_form"


class BadSpecializationPoint(QuadPencilError):
    code = "bad_specialization_point"


class HypothesisViolation(QuadPencilError):
    code = "hypothesis_violation"

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DimensionMismatch(QuadPencilError):
    code = "dimension_mismatch"
