"""Instance bounds shared by the library and the command line."""

import os

DEFAULT_BOUND = 7
ENV_VAR = "PARAHECKE_BOUND"


def instance_bound(override=None):
    """The cap on n: explicit override, then $PARAHECKE_BOUND, then 7."""
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError("%s must be an integer, got %r" % (ENV_VAR, env)) from None
    return DEFAULT_BOUND
