# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators

# -------- setup a uuid for this hypershell session -------
import time
from uuid import uuid4

init_time = time.time()
"""unix time initiatization time for this hypershell session"""
session_uuid = uuid4().hex
"""a universally unique id for this hypershell session"""

# ----------- Setup the Root HyperShell Logger ---------------
from .Logger import MASTER_LOGGER, get_logger, set_log_level, HypershellLogger


# ---------- import hypershell ----------
from .version_info import *
from .core import *

# Fraction is the rational type used throughout the public api
from fractions import Fraction

# ---------- delete namespace pollutants ----------
del uuid4, time
