from .manager import cli_main, main, manager  # noqa
from .gen import gen  # noqa
from .corrupt import corrupt  # noqa
from .solve import solve  # noqa
from .bounds import bounds  # noqa
from .irs import irs  # noqa
from .experiment import experiment  # noqa
