"""
This module defines the messages and formatting constants of the management commands.
"""


#: Indentation of every JSON document written by the commands.
JSON_INDENT = 2

#: A string used when an input file cannot be read.
READ_ERROR = 'Cannot read {path}: {error}.'
#: A string used when an input file is not valid JSON.
JSON_ERROR = 'Invalid JSON in {path}: {error}.'
#: A string used when an output file cannot be written.
WRITE_ERROR = 'Cannot write {path}: {error}.'
#: A string used for malformed comma separated number lists.
NUMBER_LIST_ERROR = 'Expected a comma separated list of numbers, got {value!r}.'
#: A string used for malformed multiplicity matrices.
MULTIPLICITIES_ERROR = 'Expected rows of comma separated integers separated by ";", got {value!r}.'
#: A string used when --mult is given without --domain and --codomain.
MULTIPLICITIES_LAYOUT_ERROR = '--mult needs both --domain and --codomain.'
#: Message of the CommandError raised for a nonzero exit code.
EXIT_MESSAGE = 'Finished with verdict {verdict}.'
