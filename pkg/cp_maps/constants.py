"""
This module defines the error messages of the cp_maps app.
"""


#: A string used when the images of one domain block do not form an n x n array.
IMAGE_GRID_ERROR = 'Domain block {block} needs a {size}x{size} array of images.'
#: A string used when the number of image arrays differs from the number of domain blocks.
IMAGE_BLOCKS_ERROR = 'Expected images for {expected} domain blocks, got {actual}.'
#: A string used when an image is not an element of the codomain.
IMAGE_ALGEBRA_ERROR = 'The image of e({block}; {p}, {q}) is not an element of the codomain.'
#: A string used when a Kraus operator has the wrong shape.
KRAUS_SHAPE_ERROR = 'Kraus operators of domain block {block} must be {rows}x{columns} matrices, got {shape}.'
#: A string used when a composition does not chain.
COMPOSE_ERROR = 'Cannot compose: the codomain of the inner map is not the domain of the outer map.'
