import inspect


class Base(object):
    """Object whose constructor arguments are its configuration.

    Subclasses store every argument of __init__ under the same attribute
    name. get_args then recovers a configuration that recreates the object
    and __repr__ shows it.
    """

    @classmethod
    def _get_arg_names(cls):
        """Sorted names of the constructor arguments.

        Returns
        -------
        args : list of strings
            Argument names without 'self'
        """
        names = []
        for name, parameter in inspect.signature(cls.__init__).parameters.items():
            if name == "self":
                continue
            if parameter.kind in (parameter.VAR_POSITIONAL,
                                  parameter.VAR_KEYWORD):
                raise RuntimeError(
                    "%s takes *args or **kwargs. Configurable objects must "
                    "name every parameter in the signature of __init__."
                    % cls.__name__)
            names.append(name)
        return sorted(names)

    def get_args(self):
        """Constructor arguments of this object.

        Returns
        -------
        params : dict
            Maps argument names to the stored values, None if an attribute
            is missing
        """
        return dict((name, getattr(self, name, None))
                    for name in self._get_arg_names())

    def __repr__(self):
        args = self.get_args()
        return "%s(%s)" % (type(self).__name__, ", ".join(
            "%s=%r" % (name, args[name]) for name in sorted(args)))
