"""Three-valued answers returned by the searches of this library."""


def serialize_witness(witness):
    """Convert a witness into a JSON-compatible structure."""
    if witness is None or isinstance(witness, (str, int, float, bool)):
        return witness
    if hasattr(witness, 'to_dict'):
        return witness.to_dict()
    if isinstance(witness, dict):
        return {str(k): serialize_witness(v) for k, v in witness.items()}
    if isinstance(witness, (list, tuple)):
        return [serialize_witness(w) for w in witness]
    return repr(witness)


class Decision(object):
    """The outcome of a finite search that may be Yes, No or Undecided.

    Undecided is returned only when a search space exceeded its enumeration
    budget without producing a witness. It is never silently treated as No.

    Args:
        status: Text for the status. Choose from Yes, No, Undecided.
        witness: An optional object supporting the status. For Yes, this is
            the object that was found. For No, it is an optional counterexample.
        reason: Optional text explaining the status.

    Properties:
        * status
        * witness
        * reason
        * is_yes
        * is_no
        * is_undecided
    """
    __slots__ = ('_status', '_witness', '_reason')
    STATUSES = ('Yes', 'No', 'Undecided')

    def __init__(self, status, witness=None, reason=None):
        if status not in self.STATUSES:
            raise ValueError('"{}" is not a recognized decision status. Choose '
                             'from {}.'.format(status, self.STATUSES))
        self._status = status
        self._witness = witness
        self._reason = reason

    @classmethod
    def yes(cls, witness=None, reason=None):
        return cls('Yes', witness, reason)

    @classmethod
    def no(cls, reason=None, witness=None):
        return cls('No', witness, reason)

    @classmethod
    def undecided(cls, reason=None, witness=None):
        return cls('Undecided', witness, reason)

    @classmethod
    def from_dict(cls, data):
        """Create a Decision from a dictionary. The witness stays in its serialized form."""
        return cls(data['status'], data.get('witness'), data.get('reason'))

    @property
    def status(self):
        """Get text for the status of the decision."""
        return self._status

    @property
    def witness(self):
        """Get the witness object of the decision (None if there is none)."""
        return self._witness

    @property
    def reason(self):
        """Get text for the reason of the decision (None if there is none)."""
        return self._reason

    @property
    def is_yes(self):
        return self._status == 'Yes'

    @property
    def is_no(self):
        return self._status == 'No'

    @property
    def is_undecided(self):
        return self._status == 'Undecided'

    def to_dict(self):
        """Get the decision as a dictionary."""
        base = {'type': 'Decision', 'status': self._status}
        if self._reason is not None:
            base['reason'] = self._reason
        if self._witness is not None:
            base['witness'] = serialize_witness(self._witness)
        return base

    def __bool__(self):
        return self._status == 'Yes'

    __nonzero__ = __bool__

    def __eq__(self, other):
        return isinstance(other, Decision) and self._status == other._status

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._status)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        if self._reason:
            return '{}: {}'.format(self._status, self._reason)
        return self._status
