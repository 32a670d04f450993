package shop;

public class Tiny {
    int id;
}
