"""Exception types shared across growthlab."""


class GrowthLabError(Exception):
    """Base class for all growthlab errors."""


class DegreeMismatch(GrowthLabError, ValueError):
    """Permutations or groups of different degrees were combined."""


class NotBijective(GrowthLabError, ValueError):
    """An image array does not describe a bijection on 0..d-1."""


class NotASubgroup(GrowthLabError, ValueError):
    """A claimed subgroup relation H <= G does not hold."""


class ResourceCapExceeded(GrowthLabError, RuntimeError):
    """A computation would exceed a configured size cap.

    Raised explicitly instead of silently truncating results.
    """


class CorpusParseError(GrowthLabError, ValueError):
    """A group spec or corpus file could not be parsed."""
