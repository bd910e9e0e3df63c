"""
PolSys Flask app
----------------

The app object carries configuration for the command line interface.
"""

import os

import flask

from polsys.logging import configure_logging


class PolsysApp(flask.Flask):
    """The PolSys app class

    Configuration is loaded from :mod:`polsys.default_settings`, then from
    ``settings.py`` in the working directory and finally from the file named
    by the ``POLSYS_SETTINGS`` environment variable.
    """

    INSTANCE_CONFIG = 'settings.py'

    def __init__(self, import_name=__package__, config=None, testing=False, **kwargs):
        self._testing = testing
        super(PolsysApp, self).__init__(import_name, **kwargs)

        self.load_app_default_config()
        self.load_app_instance_config()

        if config:
            try:
                self.config.update(config or {})
            except TypeError:
                self.config.from_object(config)

        if testing:
            self.config['TESTING'] = True

        configure_logging(self.config.get('LOG_CONFIG_FILE'))

    def load_app_default_config(self):
        self.config.from_object('polsys.default_settings')

    def load_app_instance_config(self):
        if self._testing:
            return
        self.config.from_pyfile(os.path.join(os.getcwd(), self.INSTANCE_CONFIG), silent=True)
        self.config.from_envvar('POLSYS_SETTINGS', silent=True)


def get_app(config=None, testing=False, **kwargs):
    return PolsysApp(config=config, testing=testing, **kwargs)
