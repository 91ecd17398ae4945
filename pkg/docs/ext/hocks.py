from sphinx.application import Sphinx

from core.exceptions import OzkitError


def process_docstring(app: Sphinx, what: str, name: str, obj, options, lines) -> None:
    """
    Prepend an inheritance diagram to the docstring of the error classes.

    Connected to the 'autodoc-process-docstring' event. Only subclasses of :class:`core.exceptions.OzkitError` get a
    diagram; the value objects of the apps derive from ``object`` and a diagram would only add noise.

    Args:
        - app (Sphinx): The Sphinx application object.
        - what (str): The type of the documented object (e.g., "class", "function").
        - name (str): The fully qualified name of the object.
        - obj: The object itself.
        - options: The options given to the autodoc directive.
        - lines (list of str): The lines of the docstring, modified in place.
    """
    if what == 'class' and isinstance(obj, type) and issubclass(obj, OzkitError):
        lines[:0] = [
            '.. inheritance-diagram:: ' + name,
            '   :parts: 1',
            ''
        ]


def setup(app: Sphinx) -> dict:
    app.connect('autodoc-process-docstring', process_docstring)
    return {'parallel_read_safe': True}
