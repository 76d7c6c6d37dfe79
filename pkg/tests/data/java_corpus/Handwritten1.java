package a.b;
import java.util.Map;
import java.util.function.*;
import static java.lang.Math.*;
public class Handwritten1<T extends Comparable<T>> implements Runnable {
  private final Map<String, java.util.List<Integer>> map = new java.util.HashMap<String, java.util.List<Integer>>();
  int x = 1, y;
  static public final long BIG = 10l;
  @Override
  public void run() {
    Function<Integer,Integer> f = (a) -> a+1;
    Runnable r = () -> { x++; y++; };
    BiFunction<Integer, Integer, Integer> g = Integer::sum;
    int[] arr = new int[] {1,2,3};
    for (int i = 0, j = 10; i < j; i++, j--) { x += i; }
    for (int v : arr) x+=v;
    if (x > 0)
      y = 1;
    else if (y > 0) {
      y = 2;
    }
    else {
      y = 3;
    }
    try { x = 1; } catch (RuntimeException e) { } finally { y = 0; }
    do { x--; } while (x > 0);
    switch (x) {
      case 1: case 2:
        x++;
      case 3: {
        x--;
        break;
      }
      default:
    }
    synchronized (this) { x = y; }
    label:
    while (true) { break label; }
    x = (x > 0) ? x : -x;
    String s = "a" + "b"
        + "c";
    Object o = new Object() {
      @Override public String toString() { return "o"; }
    };
    java.util.List<? extends Number> nums = null;
    assert x > 0 : "positive";
    int z = x<<2>>1>>>3;
    boolean b = o instanceof String;
  }
  public <U> U id(U u) { return u; }
  void Bad_Name(int P, int... rest) { int Q = P; final int K = 2; }
  Handwritten1() {}
  class inner {}
  enum Color { RED, GREEN; void f() {} }
  interface I { int CONST = 1; void m(); }
}
class Extra {}
