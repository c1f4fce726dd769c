import logging

from django.conf import settings
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .exceptions import QuantumError
from .serializers import EntropyRequestSerializer, ErasureRequestSerializer, HolevoRequestSerializer
from .utils import entropy_payload, erasure_payload, holevo_payload

logger = logging.getLogger(__name__)


@api_view(['POST'])
@permission_classes([AllowAny])
def entropy_view(request):
    """Entropy of the mixture described by an ensemble"""
    serializer = EntropyRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response(serializer.errors, status=400)
    try:
        return Response(entropy_payload(serializer.save()))
    except QuantumError as e:
        logger.warning(f"Entropy request failed: {e}")
        return Response({'error': str(e)}, status=400)


@api_view(['POST'])
@permission_classes([AllowAny])
def holevo_view(request):
    """Holevo quantity and computational-basis mutual information of a signal ensemble"""
    serializer = HolevoRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response(serializer.errors, status=400)
    try:
        return Response(holevo_payload(serializer.save()))
    except QuantumError as e:
        logger.warning(f"Holevo request failed: {e}")
        return Response({'error': str(e)}, status=400)


@api_view(['POST'])
@permission_classes([AllowAny])
def erase_view(request):
    serializer = ErasureRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response(serializer.errors, status=400)
    data = serializer.validated_data
    try:
        payload = erasure_payload(
            serializer.save(),
            temperature=data['temperature'],
            match=data['match'],
            support=data['support'],
            k=settings.QIT['K_BOLTZMANN'],
        )
    except QuantumError as e:
        logger.warning(f"Erasure request failed: {e}")
        return Response({'error': str(e)}, status=400)
    return Response(payload)
