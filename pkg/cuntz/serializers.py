from rest_framework import serializers

from algebra.serializers import AlgebraSerializer, ElementSerializer
from .comparison import CuntzClass


class CuntzClassSerializer(serializers.Serializer):
    """
    ``{"algebra": algebra, "k": int, "ranks": [int, ...]}``; ``algebra`` is the base algebra ``A`` of ``M_k(A)``.
    """
    algebra = AlgebraSerializer()
    k = serializers.IntegerField(min_value=1)
    ranks = serializers.ListField(child=serializers.IntegerField(min_value=0))

    def create(self, validated_data):
        return CuntzClass(AlgebraSerializer().create(validated_data['algebra']), validated_data['k'],
                          validated_data['ranks'])


class CuntzMorphismSerializer(serializers.Serializer):
    """
    ``{"domain": algebra, "codomain": algebra, "T": [[int, ...], ...]}``.
    """
    domain = AlgebraSerializer()
    codomain = AlgebraSerializer()
    T = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()), source='matrix')


class CuntzWitnessSerializer(serializers.Serializer):
    x = ElementSerializer()
    residual = serializers.FloatField()
    delta = serializers.FloatField()
