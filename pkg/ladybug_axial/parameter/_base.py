# coding=utf-8
"""Axial parameter base object."""
import re

_STR_PATTERN = re.compile(r"\-\-(\S*\s\S*)")


def parse_parameter_string(parameter_string):
    """Get a dictionary of the --key value pairs in a parameter string."""
    matches = _STR_PATTERN.findall(parameter_string)
    return {item.split(' ')[0]: item.split(' ')[1] for item in matches}


class AxialParameter(object):
    """Axial run parameter base class."""
    _kind = None
    __slots__ = ()

    @property
    def parameter_kind(self):
        """Return the name of the part of a run to which the parameters belong."""
        return self._kind

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()
