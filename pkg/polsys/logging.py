import logging
import logging.config

import yaml


logger = logging.getLogger(__name__)


def configure_logging(file_path):
    """Configure logging from a yaml dictConfig file.

    Missing or unreadable files keep the current configuration.

    :param file_path: path to the yaml file
    """
    if not file_path:
        return

    try:
        with open(file_path, 'r') as f:
            logging_dict = yaml.safe_load(f)
    except OSError:
        logger.warning('Cannot load logging config. File: %s', file_path)
        return

    if logging_dict:
        logging.config.dictConfig(logging_dict)


def set_quiet(quiet=True):
    logging.getLogger('polsys').setLevel(logging.WARNING if quiet else logging.INFO)
