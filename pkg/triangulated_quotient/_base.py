# coding: utf-8
"""Base class for the data objects that describe a category and its structure."""


class _DataBase(object):
    """A base class for presentations, triangulations and subcategories.

    Args:
        display_name: Optional text for a human readable name of the object.

    Properties:
        * display_name
        * user_data
    """
    __slots__ = ('_display_name', '_user_data')

    def __init__(self, display_name=None):
        """Initialize base object."""
        self.display_name = display_name
        self._user_data = None

    @property
    def display_name(self):
        """Get or set text for a human readable name of the object.

        This will be None until it has been set.
        """
        return self._display_name

    @display_name.setter
    def display_name(self, value):
        if value is not None:
            value = str(value)
        self._display_name = value

    @property
    def user_data(self):
        """Get or set an optional dictionary for additional meta data for this object.

        This will be None until it has been set. All keys and values of this
        dictionary should be of a standard Python type to ensure correct
        serialization of the object to/from JSON (eg. str, float, int, list, dict)
        """
        return self._user_data

    @user_data.setter
    def user_data(self, value):
        if value is not None:
            assert isinstance(value, dict), 'Expected dictionary for object ' \
                'user_data. Got {}.'.format(type(value))
        self._user_data = value

    def _base_to_dict(self, base):
        """Add the display_name and user_data to a dictionary of this object."""
        if self._display_name is not None:
            base['display_name'] = self._display_name
        if self._user_data is not None:
            base['user_data'] = self._user_data
        return base

    def _base_from_dict(self, data):
        if data.get('display_name') is not None:
            self.display_name = data['display_name']
        if data.get('user_data') is not None:
            self.user_data = data['user_data']

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def _duplicate_base(self, new_obj):
        new_obj._display_name = self._display_name
        new_obj._user_data = None if self._user_data is None \
            else self._user_data.copy()
        return new_obj

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Triangulated Quotient Base Object'
