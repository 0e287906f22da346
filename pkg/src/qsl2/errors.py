"""Exception types shared across the package."""


class QSL2Error(Exception):
    pass


class MixedOrders(QSL2Error):
    """Arithmetic between cyclotomic scalars of different conductors."""


class MixedAlgebras(QSL2Error):
    """Arithmetic between polynomials over different generator tables."""


class CompletionFailure(QSL2Error):
    """Bounded overlap completion hit its rule or length cap."""


class NotFiniteDimensional(QSL2Error):
    pass


class ParityMismatch(QSL2Error):
    pass


class InconsistentDatum(QSL2Error):
    """The image of O(Gamma) collapsed in the constructed quotient."""


class CertificateFailed(QSL2Error):
    pass


class UnknownEntry(QSL2Error):
    pass


class ParamOutOfRange(QSL2Error):
    pass
