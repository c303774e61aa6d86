"""Exception types raised across the package."""


class LoopError(ValueError):
    """Base class for invalid loop input."""


class BadSymbol(LoopError):
    def __init__(self, row, col, value):
        super().__init__(f"entry ({row}, {col}) = {value} is out of range")
        self.row, self.col, self.value = row, col, value


class NotLatinRow(LoopError):
    def __init__(self, row):
        super().__init__(f"row {row} repeats a symbol")
        self.row = row


class NotLatinColumn(LoopError):
    def __init__(self, col):
        super().__init__(f"column {col} repeats a symbol")
        self.col = col


class NoIdentity(LoopError):
    def __init__(self):
        super().__init__("table has no two-sided identity element")


class OrderMismatch(ValueError):
    def __init__(self, a, b):
        super().__init__(f"order mismatch: {a} != {b}")


class OrderTooLarge(ValueError):
    """Raised by factorial-scale operations above the enumeration cap."""

    def __init__(self, n, cap):
        super().__init__(f"order {n} exceeds enumeration cap {cap} (set LOOPSMITH_MAX_ORDER to raise it)")
        self.n, self.cap = n, cap


class NotSteiner(LoopError):
    def __init__(self, pair, count):
        super().__init__(f"pair {pair} lies in {count} triples, expected exactly 1")
        self.pair = pair


class NotCentralLoop(ValueError):
    def __init__(self):
        super().__init__("loop satisfies none of the LC, RC, C identities")


class ParseError(LoopError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line, self.reason = line, reason
