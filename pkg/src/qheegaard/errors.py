"""Exception types shared across the package."""

from __future__ import annotations


class QHError(Exception):
    """Base class; `code` is the machine-readable name used by the CLI."""

    code = "Error"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class BraidSyntaxError(QHError):
    code = "SyntaxError"


class InvalidIndex(QHError):
    code = "InvalidIndex"


class NotAKnot(QHError):
    code = "NotAKnot"


class NotSupported(QHError):
    code = "NotSupported"


class BudgetExceeded(QHError):
    code = "BudgetExceeded"


class GeometryDegenerate(QHError):
    code = "GeometryDegenerate"


class NonTransverse(QHError):
    code = "NonTransverse"


class PathThroughPuncture(QHError):
    code = "PathThroughPuncture"


class ComponentCollision(QHError):
    code = "ComponentCollision"


class NoSolution(QHError):
    code = "NoSolution"


class RankDeficient(QHError):
    code = "RankDeficient"


class NonBigonIndexOne(QHError):
    code = "NonBigonIndexOne"
