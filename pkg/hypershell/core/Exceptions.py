# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators


class HypershellError(RuntimeError):
    """Base class of every error raised by hypershell"""
    pass


class CycloError(HypershellError):
    """Error raised by cyclotomic field arithmetic"""
    pass


class HermitianError(HypershellError):
    """Error raised by 3x3 matrix or Hermitian form computations"""
    pass


class EigenvectorError(HermitianError):
    """Raised when a matrix does not have the expected eigenspace structure"""
    pass


class NotHyperbolic(HypershellError):
    """Raised when a Hermitian form does not have signature (2,1)

    Attributes:
        sign(int): the exact sign that was found for the signature condition
    """
    def __init__(self, msg, sign=None):
        super().__init__(msg)
        self.sign = sign


class HypothesisFailure(HypershellError):
    """Raised when the shell construction cannot proceed

    Attributes:
        ridge(object): the offending ridge or pyramid, if any
        reason(str): short machine readable reason
    """
    def __init__(self, msg, ridge=None, reason=None):
        super().__init__(msg)
        self.ridge = ridge
        self.reason = reason


class PreconditionUnmet(HypershellError):
    """Raised when an invariant computation does not apply to the group"""
    pass


class CatalogError(HypershellError):
    """Error raised for unknown catalog labels, filters or missing data"""
    pass


class RelationError(HypershellError):
    """Error raised when a presentation relation cannot be evaluated"""
    pass


class StageError(HypershellError):
    """Error raised within a Stage"""
    pass


class PipelineError(HypershellError):
    """Error raised within a Pipeline"""
    pass


################################################################################
#                                 Sentinels
################################################################################
class _Sentinel(object):
    """named singleton value used where a computation returns 'no answer'
    instead of raising"""
    _instances = {}

    def __new__(cls, name):
        if name not in cls._instances:
            inst = super().__new__(cls)
            inst.name = name
            cls._instances[name] = inst
        return cls._instances[name]

    def __reduce__(self):
        return _Sentinel, (self.name,)

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.name


ExceedsCap = _Sentinel('ExceedsCap')
"""returned by capped searches (orders, braid lengths, closures) that did not
terminate below their cap"""

NotRational = _Sentinel('NotRational')
"""returned when an angle is not identified as a rational multiple of pi"""

INFINITY = _Sentinel('Infinity')
"""an infinite braid length or order (parabolic or loxodromic product)"""
