from .app import PolsysApp, get_app  # noqa
