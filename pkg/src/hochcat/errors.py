"""Error codes surfaced to callers and to the command line."""


class HochError(Exception):
    """An error with a stable code such as NO-COCYCLE."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message


class ValidationError(HochError):
    def __init__(self, message: str, pointer: str = ""):
        super().__init__("INVALID", f"{pointer}: {message}" if pointer else message)
        self.pointer = pointer
        self.detail = message
