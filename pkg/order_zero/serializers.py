from rest_framework import serializers

from algebra.serializers import AlgebraSerializer, ElementSerializer, element_in
from cp_maps.serializers import ImagesField, build_map, check_images
from .decomposition import OrderZeroDecomposition


class DecompositionSerializer(serializers.Serializer):
    """
    ``{"domain", "codomain", "h": element, "s": element, "pi": images, "residuals": {name: value}}``.
    """
    domain = AlgebraSerializer(source='pi.domain')
    codomain = AlgebraSerializer(source='pi.codomain')
    h = ElementSerializer()
    s = ElementSerializer()
    pi = ImagesField(source='pi.images')
    residuals = serializers.DictField(child=serializers.FloatField(), source='report.residuals', required=False)

    def validate(self, attrs):
        domain = AlgebraSerializer().create(attrs['pi']['domain'])
        codomain = AlgebraSerializer().create(attrs['pi']['codomain'])
        try:
            h, s = element_in(attrs['h'], codomain), element_in(attrs['s'], codomain)
            check_images(attrs['pi']['images'], domain, codomain)
        except serializers.ValidationError as error:
            raise serializers.ValidationError({'pi': error.detail})
        return {'h': h, 's': s, 'pi': build_map(domain, codomain, attrs['pi']['images'])}

    def create(self, validated_data):
        return OrderZeroDecomposition(h=validated_data['h'], pi=validated_data['pi'], s=validated_data['s'])


class WitnessSerializer(serializers.Serializer):
    """
    ``{"a": element, "b": element, "violation": real}``.
    """
    a = ElementSerializer()
    b = ElementSerializer()
    violation = serializers.FloatField()
