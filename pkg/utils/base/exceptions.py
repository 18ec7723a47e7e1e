"""
Exceptions raised across all packages
"""

from rest_framework.exceptions import ParseError


class KempeLabError(Exception):
    """Base class of every domain error"""


class GraphError(KempeLabError, ValueError):
    """Invalid graph construction or contraction"""


class SizeLimitError(KempeLabError, ValueError):
    """A documented size limit was exceeded"""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what} is {size}, the limit is {limit}")


class InstanceError(KempeLabError, ValueError):
    """
    Invalid coloring or transversal. `field` and `index` locate the
    offending entry of the instance document, e.g. ``classes[2]``
    """

    def __init__(self, message: str, field: str = '', index=None):
        self.message = message
        self.field = field
        self.index = index
        super().__init__(f"{self.path}: {message}" if field else message)

    @property
    def path(self) -> str:
        if self.index is None:
            return self.field
        return f"{self.field}[{self.index}]"


class PatternError(KempeLabError, ValueError):
    """Target pattern does not fit the instance"""


class PermutationError(KempeLabError, ValueError):
    """Permutation is not good"""


class WitnessError(KempeLabError, ValueError):
    """Matching witness fails one of its invariants"""

    def __init__(self, message: str, pair=None):
        self.pair = pair
        super().__init__(message)


class TransformError(KempeLabError, ValueError):
    """Instance transformation cannot be applied"""


class BudgetError(KempeLabError, ValueError):
    """Malformed search budget"""


class FamilyError(KempeLabError, ValueError):
    """Unknown graph family or invalid parameters"""


class SolverError(KempeLabError, RuntimeError):
    """A search produced a result its own verifier rejects"""


class BudgetExceeded(KempeLabError, RuntimeError):
    """A search stopped at its node or time budget without an answer"""


class DocumentParseError(ParseError):
    """
    Malformed or incomplete input document. Carries the byte
    `offset` of syntax errors and the field `path` of semantic ones
    """
    default_detail = 'Malformed or incomplete document'
    default_code = 'bad_document'

    def __init__(self, detail=None, offset=None, path='', source=''):
        self.offset = offset
        self.path = path
        self.source = source
        super().__init__(detail)

    def __str__(self):
        where = []
        if self.source:
            where.append(str(self.source))
        if self.path:
            where.append(self.path)
        if self.offset is not None:
            where.append(f"byte {self.offset}")
        prefix = ': '.join(where)
        return f"{prefix}: {self.detail}" if prefix else str(self.detail)
