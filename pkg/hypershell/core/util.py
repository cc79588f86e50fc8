# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
from ..Logger import get_logger
from fractions import Fraction
from functools import reduce, wraps
import math
import time

TIMER_LOGGER = get_logger('TIMER')


################################################################################
#                                 Timing
################################################################################
def timer(func):
    """Decorator to time how long a func takes to run in seconds

    Example:
        >>> import hypershell as hs
        >>>
        >>> @hs.timer
        ... def build():
        ...    return hs.mostow_group(4, hs.Fraction(1,4))
        >>>
        >>> G = build() # doctest: +ELLIPSIS
        ...
    """
    @wraps(func)
    def _timer(*args, **kwargs):
        t = Timer()
        ret = func(*args, **kwargs)
        msg = "ran function '{name}' in {t}sec".format(name=func.__name__,
                                                        t=t.time())
        TIMER_LOGGER.info(msg)
        return ret

    return _timer


def timer_ms(func):
    """Decorator to time how long a func takes to run in milliseconds"""
    @wraps(func)
    def _timer_ms(*args, **kwargs):
        t = Timer()
        ret = func(*args, **kwargs)
        msg = "ran function '{name}' in {t}ms".format(name=func.__name__,
                                                       t=t.time_ms())
        TIMER_LOGGER.info(msg)
        return ret

    return _timer_ms


class Timer(object):
    """
    Timer which can be used to time processes, stages and closures

    Attributes:
        _start (float): start time in seconds since the epoch
        _last (float): last time the lap timer was called

    Example:
        timer = Timer()
        shell = build_shell(G)
        print( timer.lap() )

        realized = [realize(pyr, G) for pyr in shell]
        print( timer.lap() )
    """
    def __init__(self):
        self._start = time.time()
        self._last = self._start

    def reset(self):
        """ resets the timer start time """
        self.__init__()

    def time(self):
        """returns the time in seconds since the timer started or since it was
         last reset"""
        return round(self.raw_time(), 3)

    def raw_time(self):
        """returns the unrounded time in seconds since the timer started"""
        return time.time() - self._start

    def lap(self):
        """returns time in seconds since last time the lap was called"""
        now = time.time()
        lap = now - self._last
        self._last = now
        return round(lap, 3)

    def time_ms(self):
        """returns the time in milliseconds since the timer started or since
        it was last reset"""
        return round(self.raw_time() * 1000, 3)


################################################################################
#                             Rational helpers
################################################################################
def lcm(*values):
    """least common multiple of positive integers (1 for no arguments)"""
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def as_fraction(value):
    """converts ints, Fractions and strings such as "3/14" into a Fraction"""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def fraction_str(value):
    """"a/b" for non-integral fractions, "a" otherwise"""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)
