from rest_framework import serializers

from core.serializers import ComplexMatrixField
from .algebras import AlgElement, FdAlgebra


class AlgebraSerializer(serializers.Serializer):
    """
    ``{"blocks": [n_1, ...]}``.
    """
    blocks = serializers.ListField(child=serializers.IntegerField(min_value=1), source='block_dims', min_length=1)

    def create(self, validated_data):
        return FdAlgebra(validated_data['block_dims'])


def check_blocks(blocks, algebra: FdAlgebra) -> None:
    """
    Check that a list of parsed matrices fits ``algebra``.

    Raises:
        - serializers.ValidationError: On a wrong block count or shape.
    """
    if len(blocks) != algebra.num_blocks:
        raise serializers.ValidationError(f'Expected {algebra.num_blocks} blocks, got {len(blocks)}.')
    for index, (block, n) in enumerate(zip(blocks, algebra.block_dims)):
        if block.shape != (n, n):
            raise serializers.ValidationError(f'Block {index} must be {n}x{n}, got {block.shape[0]}x{block.shape[1]}.')


class ElementSerializer(serializers.Serializer):
    """
    ``{"blocks": [matrix, ...]}``.

    The algebra is taken from the ``algebra`` context entry when present; otherwise it is inferred from the block
    shapes, which must then be square. Nested elements are re-checked by the enclosing serializer, which knows the
    algebra they belong to.
    """
    blocks = serializers.ListField(child=ComplexMatrixField(), min_length=1)

    def validate(self, attrs):
        algebra = self.context.get('algebra')
        if algebra is None:
            for block in attrs['blocks']:
                if block.shape[0] != block.shape[1] or block.shape[0] == 0:
                    raise serializers.ValidationError('Every block must be a nonempty square matrix.')
            algebra = FdAlgebra([block.shape[0] for block in attrs['blocks']])
        check_blocks(attrs['blocks'], algebra)
        attrs['algebra'] = algebra
        return attrs

    def create(self, validated_data):
        return AlgElement(validated_data['algebra'], validated_data['blocks'])


def element_in(data: dict, algebra: FdAlgebra) -> AlgElement:
    """
    Build an element of ``algebra`` from the validated data of a nested :class:`ElementSerializer`.

    Raises:
        - serializers.ValidationError: If the blocks do not fit ``algebra``.
    """
    check_blocks(data['blocks'], algebra)
    return AlgElement(algebra, data['blocks'])
