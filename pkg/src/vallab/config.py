"""Runtime configuration knobs.

The only knob is the ambient-dimension cap for the combinatorial ray
enumeration.  Hyperplane-arrangement enumeration is exponential in the
dimension, so the default keeps things at desk scale; raise the cap via
the ``VALLAB_DIM_CAP`` environment variable if you accept the cost.
"""

import os

DEFAULT_DIM_CAP = 4

ENV_DIM_CAP = "VALLAB_DIM_CAP"


def dimension_cap(override=None):
    """Resolve the active dimension cap.

    ``override`` wins, then the ``VALLAB_DIM_CAP`` environment variable,
    then the default of 4.
    """
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_DIM_CAP)
    if env is not None:
        return int(env)
    return DEFAULT_DIM_CAP
