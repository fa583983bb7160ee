"""Weight diagrams, odd reflections and tail invariants for gl(m|n)."""

from ._errors import (
    EnumerationTooLarge,
    InvalidAtomIndexSet,
    NotDaggerDiagram,
    NotDominant,
    NotIncomparable,
    NotIsoSet,
    ParseError,
    RootNotSimpleInBase,
    SuperweightsError,
    TooManyStars,
)
from .core import *  # noqa: F401,F403
from .ctd import *  # noqa: F401,F403
from .diagrams import *  # noqa: F401,F403
from .oracle import *  # noqa: F401,F403
from .tails import *  # noqa: F401,F403

import sys as _sys

# keep the submodule reachable as superweights.ctd; the function of the
# same name is also exported as change_tracking_diagram
change_tracking_diagram = ctd  # noqa: F405
ctd = _sys.modules[__name__ + ".ctd"]

__version__ = "0.1.0"
