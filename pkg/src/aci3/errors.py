class DomainError(ValueError):
    """Invalid input or a mathematically impossible request.

    Carries a stable machine-readable ``code`` alongside the human message,
    so CLI consumers can dispatch on it.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
