from rest_framework import serializers

from algebra.serializers import AlgebraSerializer
from .maps import GenSpec


class GenSpecSerializer(serializers.Serializer):
    """
    ``{"domain": algebra, "codomain": algebra, "multiplicities": [[int, ...], ...], "seed": int, "strict_h": bool}``.
    """
    domain = AlgebraSerializer()
    codomain = AlgebraSerializer()
    multiplicities = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)))
    seed = serializers.IntegerField(min_value=0, max_value=2 ** 64 - 1)
    strict_h = serializers.BooleanField(default=True)

    def create(self, validated_data):
        return GenSpec(
            domain=AlgebraSerializer().create(validated_data['domain']),
            codomain=AlgebraSerializer().create(validated_data['codomain']),
            multiplicities=validated_data['multiplicities'],
            seed=validated_data['seed'],
            strict_h=validated_data['strict_h'],
        )
