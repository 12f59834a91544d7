"""Exception hierarchy shared across the toolkit."""


class MuseError(Exception):
    """Base class for all toolkit errors."""


class ParseError(MuseError):
    """Source text is not valid Solidity for the supported grammar."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


class UnsupportedConstruct(ParseError):
    """Grammar feature outside the supported subset; names the construct."""

    def __init__(self, construct: str, line: int, col: int):
        super().__init__(f"unsupported construct: {construct}", line, col)
        self.construct = construct


class OverlapError(MuseError):
    """Edit batch contains overlapping spans."""


class OutOfBoundsError(MuseError):
    """Edit span lies outside the target text."""


class UnknownOperator(MuseError):
    """Operator code not present in the registry."""


class StaleMutation(MuseError):
    """Mutation no longer matches the source it was derived from."""


class CompilerUnavailable(MuseError):
    """No compiler binary can be invoked."""


class CompilerVersionUnavailable(CompilerUnavailable):
    """No available compiler satisfies the file's pragma."""


class CompileFailure(MuseError):
    """Compilation failed; carries the compiler diagnostics."""

    def __init__(self, diagnostics):
        super().__init__(diagnostics[0] if diagnostics else "compilation failed")
        self.diagnostics = list(diagnostics)


class OriginalDoesNotCompile(MuseError):
    """The unmutated project fails to compile; the campaign cannot run."""


class RunnerError(MuseError):
    """Test framework infrastructure failure (not a test failure)."""


class DetectorUnavailable(MuseError):
    """Detector executable missing or not configured."""


class DetectorCrash(MuseError):
    """Detector exited abnormally; carries captured output."""

    def __init__(self, message: str, output: str = ""):
        super().__init__(message)
        self.output = output


class MissingArtifact(MuseError):
    """Expected mutant file or log row is absent from the output directory."""


class ConfigError(MuseError):
    """Invalid configuration value or file."""
