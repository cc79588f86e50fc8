# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
import os

# MODIFY THIS VARIABLE EVERY TIME A NEW IMPORTABLE CONSTANT IS ADDED
__all__ = [
            'UUID_ORDER',
            'BRAID_CAP',
            'ITERATION_CAP',
            'STABILIZER_CAP',
            'ORDER_CAP',
            'START_BITS',
            'DEFAULT_PRECISION_BITS',
            'PRECISION_ENV_VAR',
            'SCHEMA_VERSION',
            'STAGE_NAMES',
            'FAMILIES',
            'precision_bits',
            ]


UUID_ORDER = 6
"""number of digits for pipeline and stage UUIDS. default is 6 (~16.7million)"""


# ------------------Search caps------------------
BRAID_CAP = 2000
"""largest braid length searched for before reporting ExceedsCap"""

ITERATION_CAP = 10000
"""largest number of pyramids the shell builder will create"""

STABILIZER_CAP = 1000
"""largest group order enumerated by the breadth first closure"""

ORDER_CAP = 2000
"""default cap for projective orders of single elements"""


# ------------------Precision------------------
START_BITS = 64
"""starting precision of the escalating sign oracle"""

DEFAULT_PRECISION_BITS = 256
"""default precision used for certified numerics (embeddedness checks)"""

PRECISION_ENV_VAR = 'HYPERSHELL_PRECISION'
"""environment variable overriding DEFAULT_PRECISION_BITS"""


# ------------------Reports------------------
SCHEMA_VERSION = 1
"""version of the JSON report schema emitted by the command line"""

STAGE_NAMES = ('type', 'shell', 'realize', 'invariants', 'verify')
"""stages understood by the analysis pipeline, in their canonical order"""

FAMILIES = ('sporadic', 'thompson', 'mostow')
"""lattice families present in the catalog"""


def precision_bits(bits=None):
    """returns the working precision in bits

    An explicit `bits` wins over the HYPERSHELL_PRECISION environment variable,
    which in turn wins over DEFAULT_PRECISION_BITS. Invalid environment values
    are ignored.
    """
    if bits:
        return int(bits)
    env = os.environ.get(PRECISION_ENV_VAR)
    if env is not None:
        try:
            bits = int(env)
            if bits > 0:
                return bits
        except ValueError:
            pass
    return DEFAULT_PRECISION_BITS
