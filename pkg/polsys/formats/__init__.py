import os

from polsys.errors import UsageError


formats = []


def get_all_formats():
    """Return all formats registered."""
    return [format_cls() for format_cls in formats]


def get_format(path):
    """Format instance matching the extension of ``path``."""
    extension = os.path.splitext(path)[1].lstrip('.')
    for format_cls in formats:
        if format_cls.FILE_EXTENSION == extension:
            return format_cls()
    raise UsageError('unknown file type %r' % (path,), {'extensions': [f.FILE_EXTENSION for f in formats]})


class FormatRegistry(type):
    """Registry metaclass for file formats."""

    def __init__(cls, name, bases, attrs):
        """Register sub-classes of BaseFormat class when defined."""
        super(FormatRegistry, cls).__init__(name, bases, attrs)
        if name != 'BaseFormat':
            formats.append(cls)


from .instance import InstanceDocument, InstanceFormat  # noqa
from .samples import SamplesDocument, SamplesFormat  # noqa
