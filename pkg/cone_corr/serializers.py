from rest_framework import serializers

from algebra.serializers import AlgebraSerializer, ElementSerializer, element_in
from core.serializers import FiniteFloatField
from cp_maps.serializers import ImagesField, build_map, check_images
from .cone import ConeHomRep, ConeLevel


class ConeLevelSerializer(serializers.Serializer):
    t = FiniteFloatField()
    p = ElementSerializer()


class ConeHomRepSerializer(serializers.Serializer):
    """
    ``{"domain": algebra, "codomain": algebra, "levels": [{"t": real, "p": element}, ...], "pi": images}``.

    Only the shapes are checked here; :meth:`cone_corr.cone.ConeHomRep.validate` checks the invariants.
    """
    domain = AlgebraSerializer()
    codomain = AlgebraSerializer()
    levels = ConeLevelSerializer(many=True)
    pi = ImagesField(source='pi.images')

    def validate(self, attrs):
        domain = AlgebraSerializer().create(attrs['domain'])
        codomain = AlgebraSerializer().create(attrs['codomain'])
        try:
            levels = [ConeLevel(level['t'], element_in(level['p'], codomain)) for level in attrs['levels']]
        except serializers.ValidationError as error:
            raise serializers.ValidationError({'levels': error.detail})
        try:
            check_images(attrs['pi']['images'], domain, codomain)
        except serializers.ValidationError as error:
            raise serializers.ValidationError({'pi': error.detail})
        return {'domain': domain, 'codomain': codomain, 'levels': levels,
                'pi': build_map(domain, codomain, attrs['pi']['images'])}

    def create(self, validated_data):
        return ConeHomRep(**validated_data)


class ConeHomReportSerializer(serializers.Serializer):
    multiplicativity = serializers.FloatField()
    adjoint = serializers.FloatField()
    defect = serializers.FloatField()
    threshold = serializers.FloatField()
    passed = serializers.BooleanField()
