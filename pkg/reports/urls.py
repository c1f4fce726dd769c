from django.urls import path
from . import views

urlpatterns = [
    path('', views.report_run_list, name='report-run-list'),
    path('<int:pk>/', views.report_run_detail, name='report-run-detail'),
    path('run/', views.report_run_fresh, name='report-run-fresh'),
]
