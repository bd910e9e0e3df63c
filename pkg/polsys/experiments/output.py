import csv
import logging
import os

from polsys import default_settings
from polsys.signals import row_written


logger = logging.getLogger(__name__)


def metadata_line(cfg):
    """Reproduction choices that are not part of the failure rate table itself."""
    return '# generator=%s m=%d deg_a=%d df=%d adversarial=%s\n' % (
        cfg.generator, cfg.m, cfg.deg_a, cfg.df, str(cfg.adversarial).lower())


def write_result(path, result, columns=None):
    """Append one result row to ``path``, writing metadata and header to a new file."""
    columns = columns or default_settings.CSV_COLUMNS
    new_file = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, 'a', newline='', encoding='utf-8') as f:
        if new_file:
            f.write(metadata_line(result.config))
        writer = csv.DictWriter(f, fieldnames=columns, lineterminator='\n', extrasaction='ignore')
        if new_file:
            writer.writeheader()
        writer.writerow(result.row())
    logger.info('row written to %s', path)
    row_written.send(result, path=path)


def format_result(result, columns=None):
    row = result.row()
    return ' '.join('%s=%s' % (column, row[column]) for column in columns or default_settings.CSV_COLUMNS)
