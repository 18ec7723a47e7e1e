class RCode:
    """
    Response code class
    """

    def __init__(self, code, detail):
        """
        Create a new instance of the class

        :param code: process exit status
        :type code: int
        :param detail: status detail
        :type detail: str
        """
        self.code = code
        self.detail = detail

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"RCode({self.code}, {self.detail!r})"


class ExitStatus:
    """
    Exit codes of the command-line surface
    """
    COMPLETED = RCode(0, "Completed with the expected outcome")
    VIOLATION = RCode(1, "Property violation found")
    USAGE = RCode(2, "Usage or parse error")
    BUDGET = RCode(3, "Search budget exceeded")

    @classmethod
    def all(cls):
        return [cls.COMPLETED, cls.VIOLATION, cls.USAGE, cls.BUDGET]

    @classmethod
    def detail_for(cls, code: int) -> str:
        for status in cls.all():
            if status.code == code:
                return status.detail
        return ''
