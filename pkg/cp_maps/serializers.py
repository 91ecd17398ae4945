from rest_framework import serializers

from algebra.algebras import FdAlgebra
from algebra.serializers import AlgebraSerializer, ElementSerializer, check_blocks, element_in
from .maps import CpMap, make_map


class ImagesField(serializers.ListField):
    """
    The images of the matrix units: ``images[i][p][q]`` is the codomain element ``phi(e^{(i)}_{pq})``.
    """
    child = serializers.ListField(child=serializers.ListField(child=ElementSerializer()))

    def to_representation(self, data):
        return [[[ElementSerializer(image).data for image in row] for row in grid] for grid in data]


def check_images(images: list, domain: FdAlgebra, codomain: FdAlgebra) -> None:
    """
    Raises:
        - serializers.ValidationError: If the nesting does not match ``domain`` or an image does not fit ``codomain``.
    """
    if len(images) != domain.num_blocks:
        raise serializers.ValidationError(f'Expected images for {domain.num_blocks} domain blocks.')
    for i, n in enumerate(domain.block_dims):
        if len(images[i]) != n or any(len(row) != n for row in images[i]):
            raise serializers.ValidationError(f'Domain block {i} needs a {n}x{n} array of images.')
        for row in images[i]:
            for image in row:
                check_blocks(image['blocks'], codomain)


def build_map(domain: FdAlgebra, codomain: FdAlgebra, images: list) -> CpMap:
    """
    The map of validated ``images`` data.
    """
    return make_map(domain, codomain, [[[element_in(image, codomain) for image in row] for row in grid]
                                       for grid in images])


class MapSerializer(serializers.Serializer):
    """
    ``{"domain": algebra, "codomain": algebra, "images": [block i -> n_i x n_i array of codomain elements]}``.
    """
    domain = AlgebraSerializer()
    codomain = AlgebraSerializer()
    images = ImagesField()

    def validate(self, attrs):
        attrs['domain'] = AlgebraSerializer().create(attrs['domain'])
        attrs['codomain'] = AlgebraSerializer().create(attrs['codomain'])
        try:
            check_images(attrs['images'], attrs['domain'], attrs['codomain'])
        except serializers.ValidationError as error:
            raise serializers.ValidationError({'images': error.detail})
        return attrs

    def create(self, validated_data):
        return build_map(validated_data['domain'], validated_data['codomain'], validated_data['images'])
