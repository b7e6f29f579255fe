from ._superteich import *  # noqa: F401,F403
