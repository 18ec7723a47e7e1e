from rest_framework import serializers

from .models import K33, K5, MinorEmbedding


class MinorEmbeddingSerializer(serializers.Serializer):
    """Embedding document ``{"bags": {"v": [x, ...], ...}}`` keyed by pattern vertex"""
    bags = serializers.DictField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)))

    def validate_bags(self, value):
        bags = {}
        for key, members in value.items():
            try:
                vertex = int(key)
            except (TypeError, ValueError):
                raise serializers.ValidationError({key: ['bag keys must be pattern vertex indices']})
            bags[vertex] = frozenset(members)
        return bags

    def create(self, validated_data):
        return MinorEmbedding(validated_data['bags'])

    def to_representation(self, instance):
        if isinstance(instance, MinorEmbedding):
            return instance.to_dict()
        return super().to_representation(instance)


class RemarkReportSerializer(serializers.Serializer):
    premises_ok = serializers.BooleanField()
    planar = serializers.BooleanField()
    has_k5_minor = serializers.BooleanField()
    k5_embedding = MinorEmbeddingSerializer(allow_null=True)
    nonplanarity_pattern = serializers.ChoiceField(choices=[K5, K33], allow_null=True)
    nonplanarity_embedding = MinorEmbeddingSerializer(allow_null=True)
    consistent = serializers.BooleanField()
