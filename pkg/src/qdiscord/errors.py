"""Exception hierarchy for qdiscord."""


class QDiscordError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitian(QDiscordError, ValueError):
    pass


class NegativeInput(QDiscordError, ValueError):
    pass


class ParamOutOfRange(QDiscordError, ValueError):
    pass


class InvalidChannel(QDiscordError, ValueError):
    pass


class InvalidState(QDiscordError, ValueError):
    pass


class NotXForm(QDiscordError, ValueError):
    pass


class NotRepresentable(QDiscordError, ValueError):
    pass


class NotBellDiagonal(QDiscordError, ValueError):
    pass


class DomainExceeded(QDiscordError, ValueError):
    """A closed-form expression was evaluated outside the region where it is defined."""


class OptimizerDidNotConverge(QDiscordError, RuntimeError):
    pass
