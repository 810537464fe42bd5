"""
Exception hierarchy shared by the geometry, algebra and verification layers.

Every exception carries a readable message built from ``ErrorMessages`` and, where a
caller can act on it, the structured context that triggered it.
"""

from typing import Optional, Sequence


class CoconeError(Exception):
    """
    Base class for every failure raised by the toolkit.
    """


class GeometryError(CoconeError):
    pass


class DimensionMismatchError(GeometryError):
    pass


class UnboundedPolyhedronError(GeometryError):
    def __init__(self, message: str, direction: Optional[Sequence] = None):
        super().__init__(message)
        self.direction = tuple(direction) if direction is not None else None


class EmptyPolyhedronError(GeometryError):
    pass


class DegenerateHullError(GeometryError):
    pass


class ConeError(CoconeError):
    pass


class NotFullDimensionalError(ConeError):
    pass


class NotStrictlyConvexError(ConeError):
    def __init__(self, message: str, ray: Sequence[int]):
        super().__init__(message)
        self.ray = tuple(ray)


class RegionError(CoconeError):
    pass


class EmptyGeneratorSetError(RegionError):
    pass


class GeneratorOutsideConeError(RegionError):
    def __init__(self, message: str, point: Sequence):
        super().__init__(message)
        self.point = tuple(point)


class ConeMismatchError(RegionError):
    pass


class NotCoboundedError(RegionError):
    """
    Raised when C minus the region is unbounded.

    Attributes:
        ray (tuple[int, ...]): An extreme ray of the cone along which the complement is unbounded.
    """

    def __init__(self, message: str, ray: Sequence[int]):
        super().__init__(message)
        self.ray = tuple(ray)


class ArityError(CoconeError):
    pass


class FitMismatchError(CoconeError):
    pass


class IdealError(CoconeError):
    pass


class AlphaOutsideSemigroupError(IdealError):
    pass


class NotMPrimaryError(IdealError):
    def __init__(self, message: str, ray: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.ray = tuple(ray) if ray is not None else None


class SemigroupMismatchError(IdealError):
    pass


class NoStabilizationError(IdealError):
    pass


class NonIntegerResultError(IdealError):
    pass


class NonPositiveResultError(IdealError):
    pass


class StaircaseCapExceededError(IdealError):
    pass


class GenerationFailedError(CoconeError):
    def __init__(self, message: str, seed: int):
        super().__init__(message)
        self.seed = seed


class ProblemFileError(CoconeError):
    """
    Raised when a problem file cannot be read or names an undefined region or ideal.
    """
