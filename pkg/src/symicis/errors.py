"""Domain errors.  Each names the precondition that failed."""


class DomainError(ValueError):
    precondition = "domain"

    def __init__(self, message, precondition=None):
        super().__init__(message)
        if precondition is not None:
            self.precondition = precondition

    def __str__(self):
        return f"{self.precondition}: {super().__str__()}"
