"""Exception types raised by the design pipeline."""


class DesignError(Exception):
    """Base class; ``reason`` is a short machine-readable tag."""

    reason = "design-error"


class DesignInfeasible(DesignError):
    reason = "design-infeasible"


class DegenerateCodebook(DesignError):
    reason = "degenerate-codebook"


class RelationViolation(DesignError):
    reason = "relation-violation"


class DegenerateGroup(DesignError):
    reason = "degenerate-group"


class NotOrthotope(DesignError):
    reason = "not-orthotope"


class ProfileMismatch(DesignError):
    reason = "profile-mismatch"


class NoBalancedRounding(DesignError):
    reason = "no-balanced-rounding"


class SearchTooLarge(DesignError):
    """The orthogonality graph exceeds the configured vertex limit."""

    reason = "search-limit"
